#include "infcc/exchange.hpp"

#include <algorithm>
#include <stdexcept>

#include "infcc/error.hpp"

namespace infcc {

std::string to_string(Region r) {
  switch (r) {
    case Region::kAll: return "All";
    case Region::kEMinus: return "EMinus";
    case Region::kEPlus: return "EPlus";
    case Region::kAbove: return "Above";
    case Region::kOutside: return "Outside";
  }
  return "?";
}

ReachabilityVerdict is_reachable(const Triangulation& T, const Arc& d) {
  if (const auto* p = std::get_if<PolygonBase>(&T.base())) {
    const bool inside = d.m >= p->lo && d.n <= p->hi && !(d.m == p->lo && d.n == p->hi);
    return {inside, inside ? Region::kAll : Region::kOutside, 0};
  }
  const auto n = T.fountain_vertex();
  if (!n) return {true, Region::kAll, 0};
  if (d.n <= *n) return {true, Region::kEMinus, *n};
  if (d.m >= *n) return {true, Region::kEPlus, *n};
  return {false, Region::kAbove, *n};
}

LaurentPoly ClusterMap::cc(const Arc& d) {
  if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  if (T_.contains(d)) return memo_.emplace(d, LaurentPoly::variable(d)).first->second;
  const auto verdict = is_reachable(T_, d);
  if (!verdict.reachable) {
    if (verdict.region == Region::kOutside) {
      throw Error(ErrorCode::kArcOutsideModel, "arc " + to_string(d) + " is outside the polygon");
    }
    throw Error(ErrorCode::kUnreachable, "arc " + to_string(d) + " straddles the fountain",
                {{"unreachable", {{"fountain", verdict.fountain}}}});
  }
  const PolygonModel model = T_.local_model(d);
  return cc_in(model, d, 0);
}

LaurentPoly ClusterMap::cc(const Side& s) {
  if (const auto* a = std::get_if<Arc>(&s)) return cc(*a);
  return LaurentPoly::one();
}

LaurentPoly ClusterMap::cc_multiset(std::span<const Arc> objects) {
  LaurentPoly r = LaurentPoly::one();
  for (const auto& a : objects) r *= cc(a);
  return r;
}

LaurentPoly ClusterMap::cc_sides(std::span<const Side> sides) {
  LaurentPoly r = LaurentPoly::one();
  for (const auto& s : sides) r *= cc(s);
  return r;
}

LaurentPoly ClusterMap::side_value(const PolygonModel& model, int x, int y, int depth) {
  if (x > y) std::swap(x, y);
  if (y - x == 1) return LaurentPoly::one();
  if (x == model.lo() && y == model.hi()) {
    if (model.closing_member()) return LaurentPoly::variable(*model.closing_member());
    return LaurentPoly::one();
  }
  return cc_in(model, Arc{x, y}, depth + 1);
}

LaurentPoly ClusterMap::cc_in(const PolygonModel& model, const Arc& d, int depth) {
  if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  if (model.has(d)) return memo_.emplace(d, LaurentPoly::variable(d)).first->second;

  const auto cross = model.crossers(d);
  if (cross.empty()) throw std::logic_error("non-member arc " + to_string(d) + " crosses nothing");
  const Arc u = cross.front();
  std::array<int, 4> w{d.m, d.n, u.m, u.n};
  std::sort(w.begin(), w.end());

  // Each side of the quadrilateral crosses strictly fewer members than d.
  for (auto [x, y] : {std::pair{w[0], w[1]}, {w[2], w[3]}, {w[1], w[2]}, {w[0], w[3]}}) {
    if (y - x >= 2 && !(x == model.lo() && y == model.hi()) &&
        model.crossers(Arc{x, y}).size() >= cross.size()) {
      throw std::logic_error("exchange recursion does not shrink at " + to_string(d));
    }
  }
  LaurentPoly num = side_value(model, w[0], w[1], depth) * side_value(model, w[2], w[3], depth);
  num += side_value(model, w[1], w[2], depth) * side_value(model, w[0], w[3], depth);
  return memo_.emplace(d, num.div_exact_variable(u)).first->second;
}

LaurentPoly cc(const Triangulation& T, const Arc& d) { return ClusterMap(T).cc(d); }

}  // namespace infcc
