#include "infcc/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "infcc/cc_direct.hpp"
#include "infcc/cli.hpp"
#include "infcc/error.hpp"
#include "infcc/exchange.hpp"
#include "infcc/generators.hpp"
#include "infcc/k_theory.hpp"
#include "infcc/reduction.hpp"
#include "infcc/serialize.hpp"
#include "infcc/tilings.hpp"

namespace infcc {

namespace {

// Collects checks; remembers the first failure.
struct Tally {
  long checks = 0;
  std::string failure;

  bool expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what();
    return ok;
  }
  SuiteResult result(int id, std::string name) const {
    return {id, std::move(name), failure.empty(), checks, failure.empty() ? std::to_string(checks) + " checks" : failure};
  }
};

std::string arcs_text(const std::vector<Arc>& v) {
  std::string s;
  for (const auto& a : v) s += to_string(a);
  return s;
}

std::vector<Arc> window_arcs(int lo, int hi) {
  std::vector<Arc> out;
  for (int m = lo; m <= hi; ++m) {
    for (int n = m + 2; n <= hi; ++n) out.emplace_back(m, n);
  }
  return out;
}

struct Model {
  Triangulation T;
  std::vector<Arc> arcs;  // reachable arcs to sample from
  std::string label;
};

std::vector<Model> axiom_models(int polygons, Rng& rng) {
  std::vector<Model> out;
  for (int k = 0; k < polygons; ++k) {
    const int n = uniform_int(rng, 4, 10);
    auto T = Triangulation::polygon(0, n - 1, random_polygon_triangulation(0, n - 1, rng));
    out.push_back({T, T.polygon_model().all_diagonals(), "polygon " + std::to_string(n)});
  }
  const auto F = Triangulation::fountain(0);
  std::vector<Arc> reach;
  for (const auto& a : window_arcs(-8, 8)) {
    if (is_reachable(F, a).reachable) reach.push_back(a);
  }
  out.push_back({F, reach, "fountain:0"});
  out.push_back({Triangulation::nested_zigzag(0), window_arcs(-8, 8), "zigzag:0"});
  return out;
}

std::array<std::array<Side, 2>, 2> resolutions(const Triangulation& T, const Arc& m, const Arc& l) {
  std::array<int, 4> w{m.m, m.n, l.m, l.n};
  std::sort(w.begin(), w.end());
  return {{{T.side_of(w[0], w[1]), T.side_of(w[2], w[3])}, {T.side_of(w[1], w[2]), T.side_of(w[0], w[3])}}};
}

SuiteResult suite_axioms(SuiteSize size, Rng& rng) {
  Tally t;
  const bool full = size == SuiteSize::kFull;
  auto models = axiom_models(full ? 50 : 10, rng);
  std::vector<ClusterMap> maps;
  for (auto& m : models) maps.emplace_back(m.T);

  for (std::size_t k = 0; k < models.size(); ++k) {
    const auto& M = models[k];
    std::vector<Arc> members;
    if (M.T.is_polygon()) {
      const auto d = M.T.polygon_model().diagonals();
      members.assign(d.begin(), d.end());
    } else {
      members = M.T.members_within(-8, 8);
    }
    for (const auto& a : members) {
      t.expect(maps[k].cc(a) == LaurentPoly::variable(a), [&] { return M.label + ": cc(t) != x_t at " + to_string(a); });
    }
  }

  const int pairs = full ? 200 : 40;
  for (int found = 0, guard = 0; found < pairs && guard < 100000; ++guard) {
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(models.size()) - 1));
    const auto& M = models[k];
    const Arc m = pick(M.arcs, rng), l = pick(M.arcs, rng);
    if (!crosses(m, l)) continue;
    ++found;
    const auto [B, Bp] = resolutions(M.T, m, l);
    const LaurentPoly lhs = maps[k].cc(m) * maps[k].cc(l);
    const LaurentPoly rhs = maps[k].cc_sides(B) + maps[k].cc_sides(Bp);
    t.expect(lhs == rhs, [&] { return M.label + ": exchange identity fails for " + to_string(m) + "," + to_string(l); });
  }

  const int multisets = full ? 100 : 20;
  for (int s = 0; s < multisets; ++s) {
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(models.size()) - 1));
    const auto& M = models[k];
    std::vector<Arc> objs;
    const int len = uniform_int(rng, 0, 4);
    for (int i = 0; i < len; ++i) objs.push_back(pick(M.arcs, rng));
    LaurentPoly prod = LaurentPoly::one();
    for (const auto& a : objs) prod *= cc(M.T, a);  // fresh session per object
    t.expect(maps[k].cc_multiset(objs) == prod, [&] { return M.label + ": multiplicativity fails on " + arcs_text(objs); });
    if (M.T.is_polygon()) {
      t.expect(cc_direct_multiset(M.T, objs) == prod,
               [&] { return M.label + ": direct formula on a direct sum fails for " + arcs_text(objs); });
    }
  }
  return t.result(1, "cluster-map axioms");
}

std::vector<Triangulation> oracle_polygons(SuiteSize size, Rng& rng) {
  std::vector<Triangulation> out;
  const int exhaustive_max = size == SuiteSize::kFull ? 7 : 6;
  for (int n = 5; n <= exhaustive_max; ++n) {
    for (auto& d : all_polygon_triangulations(0, n - 1)) out.push_back(Triangulation::polygon(0, n - 1, d));
  }
  const int randoms = size == SuiteSize::kFull ? 30 : 5;
  for (int n : {8, 9}) {
    for (int k = 0; k < randoms; ++k) {
      out.push_back(Triangulation::polygon(0, n - 1, random_polygon_triangulation(0, n - 1, rng)));
    }
  }
  return out;
}

std::string poly_label(const Triangulation& T) { return to_json(T.spec()).dump(); }

SuiteResult suite_oracle(SuiteSize size, Rng& rng) {
  Tally t;
  for (const auto& T : oracle_polygons(size, rng)) {
    ClusterMap map(T);
    for (const auto& c : T.polygon_model().all_diagonals()) {
      t.expect(cc_direct(T, c) == map.cc(c), [&] { return poly_label(T) + ": direct formula differs at " + to_string(c); });
    }
  }
  return t.result(2, "direct formula equals exchange recursion");
}

SuiteResult suite_theta(SuiteSize, Rng&) {
  Tally t;
  for (int n : {5, 6}) {
    for (const auto& d : all_polygon_triangulations(0, n - 1)) {
      const auto T = Triangulation::polygon(0, n - 1, d);
      const PolygonModel P = T.polygon_model();
      for (const auto& c : P.all_diagonals()) {
        const Side sc = polygon_shift(P, Side{c}, 1);
        const SplitK0Class lhs = theta(T, g_module(T, c).dimension());
        const SplitK0Class rhs = coindex(P, sc) - index(P, sc);
        t.expect(lhs == rhs, [&] {
          return poly_label(T) + ": theta identity fails at " + to_string(c) + " (" + to_string(lhs) + " vs " +
                 to_string(rhs) + ")";
        });
      }
    }
  }
  return t.result(3, "theta identity");
}

bool support_matches(const LaurentPoly& p, const std::vector<Arc>& crossers) {
  std::set<Arc> den;
  const Monomial d = p.denominator();
  for (const auto& [a, e] : d.exponents()) den.insert(a);
  return den == std::set<Arc>(crossers.begin(), crossers.end());
}

SuiteResult suite_positivity(SuiteSize size, Rng& rng) {
  Tally t;
  auto check = [&](const Triangulation& T, ClusterMap& map, const Arc& c, const std::string& label) {
    const LaurentPoly p = map.cc(c);
    t.expect(p.has_positive_coefficients(), [&] { return label + ": non-positive coefficient at " + to_string(c); });
    const auto cl = T.crossers(c);
    t.expect(support_matches(p, cl.arcs), [&] { return label + ": denominator support differs from crossers at " + to_string(c); });
    if (T.is_polygon()) {
      const LaurentPoly q = cc_direct(T, c);
      t.expect(q.has_positive_coefficients(), [&] { return label + ": direct formula has a non-positive coefficient"; });
    }
  };
  Rng copy = rng;
  for (const auto& M : axiom_models(size == SuiteSize::kFull ? 50 : 10, copy)) {
    ClusterMap map(M.T);
    for (const auto& c : M.arcs) check(M.T, map, c, M.label);
  }
  for (const auto& T : oracle_polygons(size, rng)) {
    ClusterMap map(T);
    for (const auto& c : T.polygon_model().all_diagonals()) check(T, map, c, poly_label(T));
  }
  return t.result(4, "positivity and denominators");
}

std::vector<Arc> reduction_spanners(const Triangulation& T, int count) {
  std::vector<Arc> out;
  if (T.fountain_vertex()) {
    for (int k = 2; static_cast<int>(out.size()) < count; ++k) {
      out.emplace_back(-k, 0);
      if (static_cast<int>(out.size()) < count) out.emplace_back(0, k);
    }
    return out;
  }
  for (const auto& a : T.members_within(-40, 40)) out.push_back(a);
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.width() < b.width(); });
  out.resize(static_cast<std::size_t>(std::min<int>(count, static_cast<int>(out.size()))));
  return out;
}

std::vector<Arc> spanned_arcs(const Arc& t) {
  std::vector<Arc> out;
  for (const auto& a : window_arcs(t.m, t.n)) {
    if (spans(t, a)) out.push_back(a);
  }
  return out;
}

const std::vector<Arc> kReductionArcs{{0, 3}, {1, 4}, {0, 5}, {-2, 4}, {2, 6}, {-3, 1}, {1, 7}, {-1, 5}, {3, 6}, {-4, 2}};

SuiteResult suite_reduction(SuiteSize size, Rng&) {
  Tally t;
  const int count = size == SuiteSize::kFull ? 20 : 6;
  for (const auto& T : {Triangulation::fountain(0), Triangulation::nested_zigzag(0)}) {
    const std::string label = to_string(T.classify());
    ClusterMap ambient(T);
    for (const auto& s : reduction_spanners(T, count)) {
      const USpec U = u_of(T, s);
      const ReducedModel R = reduce(T, s);
      ClusterMap reduced(R.triangulation());
      t.expect(R.polygon.is_triangulation() && R.rank == static_cast<int>(R.polygon.diagonals().size()),
               [&] { return label + ": reduced model at " + to_string(s) + " is not a triangulated polygon"; });
      for (const auto& d : spanned_arcs(s)) {
        const LaurentPoly bar = ambient.cc(d).substitute_unit_if([&](const Arc& a) { return U.contains(a); });
        t.expect(bar == reduced.cc(d), [&] { return label + ": specialization differs at t=" + to_string(s) + ", d=" + to_string(d); });
      }
    }
  }
  const auto Z = Triangulation::nested_zigzag(0);
  ClusterMap zmap(Z);
  const std::size_t arcs = size == SuiteSize::kFull ? kReductionArcs.size() : 4;
  for (std::size_t k = 0; k < arcs; ++k) {
    const Arc c = kReductionArcs[k];
    const auto s = choose_bounded_u(Z, c);
    if (!t.expect(s.has_value(), [&] { return "no bounded U found for " + to_string(c); })) continue;
    const ReducedModel R = reduce(Z, *s);
    t.expect(zmap.cc(c) == cc(R.triangulation(), c), [&] { return "reduction without specialization differs at " + to_string(c); });
  }
  return t.result(5, "reduction coincidence");
}

std::vector<ModClass> classes(const StringModule& M) {
  std::vector<ModClass> v;
  for (const auto& s : submodule_classes(M)) v.push_back(s.e);
  std::sort(v.begin(), v.end());
  return v;
}

SuiteResult suite_modules(SuiteSize size, Rng&) {
  Tally t;
  const int count = size == SuiteSize::kFull ? 20 : 6;
  auto check = [&](const Triangulation& T, const Arc& s, const Arc& d) {
    const USpec U = u_of(T, s);
    const ReducedModel R = reduce(T, s);
    const StringModule M = g_module(R.triangulation(), d);
    const StringModule N = pi_star(M, U);
    t.expect(classes(M) == classes(N) && count_submodules(M) == count_submodules(N),
             [&] { return "submodule tables differ under pi* at t=" + to_string(s) + ", d=" + to_string(d); });
    t.expect(N == g_module(T, d), [&] { return "pi* of G d is not the ambient G d at " + to_string(d); });
  };
  for (const auto& T : {Triangulation::fountain(0), Triangulation::nested_zigzag(0)}) {
    for (const auto& s : reduction_spanners(T, count)) {
      for (const auto& d : spanned_arcs(s)) check(T, s, d);
    }
  }
  const auto Z = Triangulation::nested_zigzag(0);
  for (const auto& c : kReductionArcs) {
    if (auto s = choose_bounded_u(Z, c)) check(Z, *s, c);
  }
  return t.result(6, "module correspondence");
}

SuiteResult suite_tilings(SuiteSize, Rng&) {
  Tally t;
  const auto Z = Triangulation::nested_zigzag(0);
  const TilingWindow A = tiling_window(Z, -8, 8);
  const TilingWindow B = tiling_window_by_recurrence(Z, -8, 8);
  const auto viol = verify_sl2(A);
  t.expect(viol.empty(), [&] {
    return "SL2 violation at (" + std::to_string(viol.front().cell.first) + "," + std::to_string(viol.front().cell.second) + ")";
  });
  for (const auto& [c, v] : A.values) {
    t.expect(v >= 1, [&] { return "entry below 1"; });
    t.expect(B.has(c.first, c.second) && B.at(c.first, c.second) == v, [&] {
      return "oracles disagree at (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
    });
  }
  const std::vector<std::pair<Cell, int>> spots{{{0, 3}, 2}, {{1, 3}, 3}, {{2, 4}, 3}, {{1, 4}, 8}, {{0, 4}, 5}};
  for (const auto& [c, v] : spots) {
    t.expect(A.at(c.first, c.second) == v && B.at(c.first, c.second) == v, [&] {
      return "spot value r(" + std::to_string(c.first) + "," + std::to_string(c.second) + ") != " + std::to_string(v);
    });
  }
  return t.result(7, "SL2 tilings");
}

SuiteResult suite_frontier(SuiteSize, Rng& rng) {
  Tally t;
  for (int k = 0; k < 5; ++k) {
    Frontier F{random_frontier_word(static_cast<std::size_t>(uniform_int(rng, 2, 12)), rng),
               {uniform_int(rng, -2, 2), 0}};
    F.start.second = F.start.first + uniform_int(rng, 0, 3);
    const std::string label = "frontier " + F.word;
    try {
      const TilingWindow P = extend_frontier(F, -6, -6, 6, 6);
      t.expect(verify_sl2(P).empty(), [&] { return label + ": extension is not an SL2 tiling"; });
      for (const auto& [c, v] : P.values) t.expect(v >= 1, [&] { return label + ": non-positive value"; });
      const Triangulation T = frontier_to_triangulation(F);
      t.expect(T.validate_window(-6, 6).valid(), [&] { return label + ": frontier arcs are not a triangulation"; });
      const TilingWindow R = tiling_window(T, -6, 6);
      const auto D = determined_region(F, -6, -6, 6, 6);
      long overlap = 0;
      for (const auto& [c, v] : D) {
        if (!R.has(c.first, c.second)) continue;
        ++overlap;
        t.expect(P.at(c.first, c.second) == R.at(c.first, c.second), [&] {
          return label + ": tilings disagree at (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
        });
      }
      t.expect(overlap > 0, [&] { return label + ": empty overlap"; });
    } catch (const Error& e) {
      t.expect(false, [&] { return label + ": " + e.what(); });
    }
  }
  return t.result(8, "frontier gluing");
}

SuiteResult suite_reachability(SuiteSize, Rng&) {
  Tally t;
  for (const auto& a : window_arcs(-6, 6)) {
    std::ostringstream out, err;
    const std::string arc = std::to_string(a.m) + "," + std::to_string(a.n);
    const int code = cli::run({"infcc", "cc", "--triangulation", "fountain:0", "--arc", arc, "--format", "json"}, out, err);
    if (a.m < 0 && a.n > 0) {
      bool diag = false;
      try {
        diag = json::parse(err.str()).at("unreachable").at("fountain") == 0;
      } catch (const std::exception&) {
      }
      t.expect(code == 2 && diag, [&] { return "straddling arc " + arc + " not refused with exit 2"; });
      continue;
    }
    if (!t.expect(code == 0, [&] { return "reachable arc " + arc + " failed: " + err.str(); })) continue;
    const LaurentPoly p = laurent_from_json(json::parse(out.str()).at("cc"));
    for (const auto& v : p.variables()) {
      if (a.n <= 0) {
        t.expect(v.n <= 0, [&] { return "arc " + arc + " uses " + to_string(v); });
      } else {
        t.expect(v.m >= 0, [&] { return "arc " + arc + " uses " + to_string(v); });
      }
    }
  }
  return t.result(9, "reachability boundary");
}

SuiteResult suite_mutation(SuiteSize size, Rng& rng) {
  Tally t;
  const int runs = size == SuiteSize::kFull ? 1000 : 150;
  for (int r = 0; r < runs; ++r) {
    Triangulation T = Triangulation::fountain(0);
    int lo = -6, hi = 6;
    switch (r % 3) {
      case 0: {
        const int n = uniform_int(rng, 4, 10);
        T = Triangulation::polygon(0, n - 1, random_polygon_triangulation(0, n - 1, rng));
        lo = 0, hi = n - 1;
        break;
      }
      case 1: T = Triangulation::fountain(uniform_int(rng, -2, 2)); break;
      default: T = Triangulation::nested_zigzag(uniform_int(rng, -2, 2)); break;
    }
    const Triangulation start = T;
    std::vector<Arc> back;
    const int len = uniform_int(rng, 0, 8);
    for (int s = 0; s < len; ++s) {
      const auto members = T.members_within(lo, hi);
      if (members.empty()) break;
      const FlipResult f = T.flip(pick(members, rng));
      back.push_back(f.replacement);
      T = f.new_triangulation;
      const Quiver Q = T.quiver(lo, hi);
      t.expect(!Q.has_loops() && !Q.has_two_cycles(), [&] { return "quiver with a loop or 2-cycle after " + to_json(T.spec()).dump(); });
      t.expect(T.validate_window(lo, hi).valid(), [&] { return "invalid triangulation after " + to_json(T.spec()).dump(); });
    }
    for (auto it = back.rbegin(); it != back.rend(); ++it) T = T.flipped(*it);
    t.expect(T == start, [&] { return "reverse flips do not restore " + to_json(start.spec()).dump(); });
  }
  return t.result(10, "mutation involution");
}

}  // namespace

SuiteResult run_suite(int id, SuiteSize size, std::uint64_t seed) {
  Rng rng(seed + static_cast<std::uint64_t>(id));
  static const std::vector<std::pair<std::string, SuiteResult (*)(SuiteSize, Rng&)>> suites{
      {"cluster-map axioms", suite_axioms},
      {"direct formula equals exchange recursion", suite_oracle},
      {"theta identity", suite_theta},
      {"positivity and denominators", suite_positivity},
      {"reduction coincidence", suite_reduction},
      {"module correspondence", suite_modules},
      {"SL2 tilings", suite_tilings},
      {"frontier gluing", suite_frontier},
      {"reachability boundary", suite_reachability},
      {"mutation involution", suite_mutation},
  };
  if (id < 1 || id > kSuiteCount) return {id, "unknown", false, 0, "no such suite"};
  const auto& [name, fn] = suites[static_cast<std::size_t>(id - 1)];
  try {
    return fn(size, rng);
  } catch (const std::exception& e) {
    return {id, name, false, 0, std::string("exception: ") + e.what()};
  }
}

std::vector<SuiteResult> run_all(SuiteSize size, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (int id = 1; id <= kSuiteCount; ++id) out.push_back(run_suite(id, size, seed));
  return out;
}

}  // namespace infcc
