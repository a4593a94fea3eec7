#include "doctest.h"

#include "infcc/cc_direct.hpp"
#include "infcc/error.hpp"
#include "infcc/exchange.hpp"
#include "infcc/generators.hpp"

using namespace infcc;

namespace {

// all subsets X with (s -> t, t in X) => s in X
long long brute_submodules(const StringModule& M) {
  const std::size_t k = M.walk.size();
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < k && ok; ++i) {
      const bool l = mask >> i & 1u, r = mask >> (i + 1) & 1u;
      ok = M.forward[i] ? (!r || l) : (!l || r);
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("linear strings have length plus one submodules") {
  StringModule M{{Arc{0, 2}, Arc{0, 3}, Arc{0, 4}, Arc{0, 5}}, {true, true, true}};
  CHECK(count_submodules(M) == 5);
  CHECK(submodule_classes(M).size() == 5);
  CHECK(count_submodules(StringModule{}) == 1);
}

TEST_CASE("modules of a pentagon") {
  const auto T = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}});
  const StringModule G = g_module(T, Arc{1, 4});
  CHECK(G.walk == std::vector<Arc>{Arc{0, 2}, Arc{0, 3}});
  CHECK(G.dimension() == ModClass::of(Arc{0, 2}) + ModClass::of(Arc{0, 3}));
  CHECK(count_submodules(G) == 3);
  CHECK(g_module(T, Arc{0, 2}).is_zero());
}

TEST_CASE("submodule counts of the nested zigzag") {
  const auto Z = Triangulation::nested_zigzag(0);
  CHECK(count_submodules(g_module(Z, Arc{0, 3})) == 2);
  CHECK(count_submodules(g_module(Z, Arc{1, 3})) == 3);
  CHECK(count_submodules(g_module(Z, Arc{1, 4})) == 8);
  CHECK(count_submodules(g_module(Z, Arc{0, 4})) == 5);
}

TEST_CASE("submodule counter agrees with brute force") {
  Rng rng(29);
  for (int r = 0; r < 500; ++r) {
    StringModule M;
    const int k = uniform_int(rng, 1, 12);
    for (int i = 0; i < k; ++i) M.walk.push_back(Arc{-i, 2 + i});
    for (int i = 0; i + 1 < k; ++i) M.forward.push_back(uniform_int(rng, 0, 1) == 1);
    CHECK(count_submodules(M) == brute_submodules(M));
    CHECK(static_cast<long long>(submodule_classes(M).size()) == brute_submodules(M));
  }
}

TEST_CASE("fountain straddlers have no finite module") {
  try {
    g_module(Triangulation::fountain(0), Arc{-1, 1});
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfiniteCrossers);
  }
}

TEST_CASE("direct formula equals the exchange recursion on random polygons") {
  Rng rng(31);
  for (int r = 0; r < 40; ++r) {
    const int n = uniform_int(rng, 5, 11);
    const auto T = Triangulation::polygon(0, n - 1, random_polygon_triangulation(0, n - 1, rng));
    ClusterMap map(T);
    const std::vector<Arc> diags = T.polygon_model().all_diagonals();
    for (const auto& c : diags) CHECK(cc_direct(T, c) == map.cc(c));
    std::vector<Arc> objs;
    for (int i = 0; i < 3; ++i) objs.push_back(pick(diags, rng));
    CHECK(cc_direct_multiset(T, objs) == map.cc_multiset(objs));
  }
}
