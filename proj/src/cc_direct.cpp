#include "infcc/cc_direct.hpp"

#include <map>
#include <stdexcept>

#include "infcc/error.hpp"
#include "infcc/k_theory.hpp"

namespace infcc {

ModClass StringModule::dimension() const {
  ModClass d;
  for (const auto& a : walk) d.add(a, 1);
  return d;
}

StringModule string_on(const Triangulation& T, std::vector<Arc> walk) {
  StringModule M;
  M.walk = std::move(walk);
  for (std::size_t i = 0; i + 1 < M.walk.size(); ++i) {
    const auto tri = T.shared_triangle(M.walk[i], M.walk[i + 1]);
    if (!tri) {
      throw std::logic_error("walk vertices " + to_string(M.walk[i]) + " and " + to_string(M.walk[i + 1]) +
                             " share no triangle");
    }
    M.forward.push_back(arrow_runs(M.walk[i], M.walk[i + 1], (*tri)[0], (*tri)[1], (*tri)[2]));
  }
  return M;
}

StringModule g_module(const Triangulation& T, const Arc& c) {
  const CrosserList cl = T.crossers(c);
  if (cl.infinite) {
    throw Error(ErrorCode::kInfiniteCrossers, "arc " + to_string(c) + " crosses infinitely many members",
                {{"infinite_crossers", {c.m, c.n}}});
  }
  return string_on(T, cl.arcs);
}

namespace {

// Closure: for an arrow s -> t, t in X forces s in X.
bool compatible(bool forward, bool left_in, bool right_in) {
  if (forward) return !right_in || left_in;  // walk[i] -> walk[i+1]
  return !left_in || right_in;
}

}  // namespace

std::vector<SubmoduleClass> submodule_classes(const StringModule& M) {
  std::vector<SubmoduleClass> out;
  const std::size_t k = M.walk.size();
  std::vector<bool> chosen(k, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      ModClass e;
      for (std::size_t j = 0; j < k; ++j) {
        if (chosen[j]) e.add(M.walk[j], 1);
      }
      out.push_back({std::move(e), 1});
      return;
    }
    for (bool v : {false, true}) {
      if (i > 0 && !compatible(M.forward[i - 1], chosen[i - 1], v)) continue;
      chosen[i] = v;
      self(self, i + 1);
    }
    chosen[i] = false;
  };
  rec(rec, 0);
  return out;
}

BigInt count_submodules(const StringModule& M) {
  if (M.walk.empty()) return 1;
  BigInt out = 1, in = 1;  // counts of closed prefixes ending outside / inside
  for (std::size_t i = 1; i < M.walk.size(); ++i) {
    BigInt nout = 0, nin = 0;
    const bool f = M.forward[i - 1];
    if (compatible(f, false, false)) nout += out;
    if (compatible(f, true, false)) nout += in;
    if (compatible(f, false, true)) nin += out;
    if (compatible(f, true, true)) nin += in;
    out = std::move(nout);
    in = std::move(nin);
  }
  return out + in;
}

LaurentPoly cc_direct(const Triangulation& P, const Arc& c) {
  const PolygonModel model = P.polygon_model();
  if (!model.is_diagonal(c)) throw Error(ErrorCode::kArcOutsideModel, "arc " + to_string(c) + " is not in the polygon");
  const StringModule G = g_module(P, c);
  const SplitK0Class lead = -coindex(model, polygon_shift(model, Side{c}, 1));
  LaurentPoly sum;
  for (const auto& [e, chi] : submodule_classes(G)) {
    sum += LaurentPoly::term(Monomial{lead + theta(P, e)}, chi);
  }
  return sum;
}

std::vector<SubmoduleClass> convolve(const std::vector<SubmoduleClass>& a, const std::vector<SubmoduleClass>& b) {
  std::map<ModClass, BigInt> acc;
  for (const auto& x : a) {
    for (const auto& y : b) acc[x.e + y.e] += x.chi * y.chi;
  }
  std::vector<SubmoduleClass> out;
  for (auto& [e, chi] : acc) out.push_back({e, chi});
  return out;
}

LaurentPoly cc_direct_multiset(const Triangulation& P, std::span<const Arc> objects) {
  const PolygonModel model = P.polygon_model();
  SplitK0Class lead;
  std::vector<SubmoduleClass> table{{ModClass{}, 1}};
  for (const auto& c : objects) {
    lead -= coindex(model, polygon_shift(model, Side{c}, 1));
    table = convolve(table, submodule_classes(g_module(P, c)));
  }
  LaurentPoly sum = LaurentPoly::term(Monomial{}, 0);
  for (const auto& [e, chi] : table) sum += LaurentPoly::term(Monomial{lead + theta(P, e)}, chi);
  return sum;
}

}  // namespace infcc
