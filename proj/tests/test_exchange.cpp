#include "doctest.h"

#include "infcc/error.hpp"
#include "infcc/exchange.hpp"
#include "infcc/generators.hpp"

using namespace infcc;

namespace {

LaurentPoly x(int m, int n) { return LaurentPoly::variable(Arc{m, n}); }
LaurentPoly one() { return LaurentPoly::one(); }

// Conway-Coxeter frieze from the triangle counts at each vertex; entry (i,j)
// is the all-ones specialisation of the character of (i,j).
std::map<std::pair<int, int>, long long> frieze(int lo, int hi, const std::set<Arc>& diagonals) {
  const int n = hi - lo + 1;
  std::vector<long long> a(static_cast<std::size_t>(n), 1);  // triangles at vertex = diagonals + 1
  for (const auto& d : diagonals) {
    ++a[static_cast<std::size_t>(d.m - lo)];
    ++a[static_cast<std::size_t>(d.n - lo)];
  }
  std::map<std::pair<int, int>, long long> m;
  for (int i = lo; i <= hi; ++i) {
    long long prev = 0, cur = 1;
    for (int j = i + 1; j < hi; ++j) {
      const long long next = a[static_cast<std::size_t>(j - lo)] * cur - prev;
      prev = cur;
      cur = next;
      m[{i, j + 1}] = cur;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("pentagon characters") {
  const auto P = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}});
  CHECK(cc(P, Arc{0, 2}) == x(0, 2));
  CHECK(cc(P, Arc{1, 3}) * x(0, 2) == x(0, 3) + one());
  CHECK(cc(P, Arc{1, 4}) * x(0, 2) * x(0, 3) == x(0, 2) + x(0, 3) + one());
  CHECK(cc(P, Arc{2, 4}) * x(0, 3) == x(0, 2) + one());
  CHECK(cc(P, Arc{1, 4}).to_text() == "(x[0,2] + x[0,3] + 1)/(x[0,2]*x[0,3])");
}

TEST_CASE("fountain example") {
  const auto F = Triangulation::fountain(0);
  CHECK(cc(F, Arc{-3, -1}).to_text() == "(x[-3,0] + 1)/x[-2,0]");
  CHECK(cc(F, Arc{1, 3}) * x(0, 2) == x(0, 3) + one());
}

TEST_CASE("reachability regions") {
  const auto F = Triangulation::fountain(0);
  CHECK(is_reachable(F, Arc{-3, -1}).region == Region::kEMinus);
  CHECK(is_reachable(F, Arc{-3, 0}).reachable);
  CHECK(is_reachable(F, Arc{1, 4}).region == Region::kEPlus);
  const auto v = is_reachable(F, Arc{-2, 3});
  CHECK_FALSE(v.reachable);
  CHECK(v.fountain == 0);
  CHECK_THROWS_AS(cc(F, Arc{-2, 3}), Error);
  CHECK(is_reachable(Triangulation::nested_zigzag(0), Arc{-30, 41}).region == Region::kAll);
}

TEST_CASE("all-ones specialisation matches the frieze") {
  Rng rng(17);
  for (int k = 0; k < 60; ++k) {
    const int n = uniform_int(rng, 4, 11);
    const auto d = random_polygon_triangulation(0, n - 1, rng);
    const auto T = Triangulation::polygon(0, n - 1, d);
    ClusterMap map(T);
    for (const auto& [cell, v] : frieze(0, n - 1, d)) {
      if (cell.second - cell.first < 2 || (cell.first == 0 && cell.second == n - 1)) continue;
      CHECK(map.cc(Arc{cell.first, cell.second}).eval_all_ones() == v);
    }
  }
}

TEST_CASE("exchange relation for crossing pairs") {
  Rng rng(19);
  const std::vector<Triangulation> models{Triangulation::nested_zigzag(0), Triangulation::zigzag(0, "RRRL"),
                                          Triangulation::polygon(0, 8, random_polygon_triangulation(0, 8, rng))};
  for (const auto& T : models) {
    ClusterMap map(T);
    int tested = 0;
    for (int guard = 0; tested < 60 && guard < 10000; ++guard) {
      const int lo = T.is_polygon() ? 0 : -6, hi = T.is_polygon() ? 8 : 6;
      const int a = uniform_int(rng, lo, hi - 2), b = uniform_int(rng, a + 2, hi);
      const int c = uniform_int(rng, lo, hi - 2), e = uniform_int(rng, c + 2, hi);
      const Arc m{a, b}, l{c, e};
      if (!crosses(m, l)) continue;
      if (T.is_polygon() && (m == Arc{0, 8} || l == Arc{0, 8})) continue;
      ++tested;
      std::array<int, 4> w{a, b, c, e};
      std::sort(w.begin(), w.end());
      const std::array<Side, 2> B{T.side_of(w[0], w[1]), T.side_of(w[2], w[3])};
      const std::array<Side, 2> Bp{T.side_of(w[1], w[2]), T.side_of(w[0], w[3])};
      CHECK(map.cc(m) * map.cc(l) == map.cc_sides(B) + map.cc_sides(Bp));
    }
    CHECK(tested == 60);
  }
}

TEST_CASE("characters are positive Laurent polynomials in the crossers") {
  const auto Z = Triangulation::zigzag(2, "LLRRRL");
  ClusterMap map(Z);
  for (int m = -6; m <= 6; ++m) {
    for (int n = m + 2; n <= 8; ++n) {
      const Arc d{m, n};
      const LaurentPoly p = map.cc(d);
      CHECK(p.has_positive_coefficients());
      const auto cr = Z.crossers(d).arcs;
      const Monomial den = p.denominator();
      CHECK(den.exponents().size() == cr.size());
      for (const auto& u : cr) CHECK(den.exponent(u) == 1);
    }
  }
}

TEST_CASE("multiplicativity") {
  const auto Z = Triangulation::nested_zigzag(0);
  ClusterMap map(Z);
  const std::vector<Arc> objs{Arc{1, 4}, Arc{0, 3}, Arc{1, 4}};
  CHECK(map.cc_multiset(objs) == map.cc(Arc{1, 4}) * map.cc(Arc{0, 3}) * map.cc(Arc{1, 4}));
  CHECK(map.cc_multiset({}) == one());
}
