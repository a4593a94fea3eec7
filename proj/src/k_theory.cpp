#include "infcc/k_theory.hpp"

#include "infcc/error.hpp"
#include "infcc/representation.hpp"

namespace infcc {

SplitK0Class theta_simple(const Triangulation& T, const Arc& t) {
  const FlipResult f = T.flip(t);
  SplitK0Class r;
  for (const auto& s : f.middle_c) {
    if (const auto* a = std::get_if<Arc>(&s)) r.add(*a, 1);
  }
  for (const auto& s : f.middle_c_prime) {
    if (const auto* a = std::get_if<Arc>(&s)) r.add(*a, -1);
  }
  return r;
}

SplitK0Class theta(const Triangulation& T, const ModClass& e) {
  SplitK0Class r;
  for (const auto& [t, c] : e.coeffs()) r += c * theta_simple(T, t);
  return r;
}

Side polygon_shift(const PolygonModel& P, const Side& c, int k) {
  if (const auto* a = std::get_if<Arc>(&c)) {
    if (!P.is_side(a->m, a->n)) return P.rotate(*a, k);
  }
  int x, y;
  if (const auto* a = std::get_if<Arc>(&c)) {
    x = a->m, y = a->n;
  } else {
    const auto& e = std::get<Edge>(c);
    x = e.lo, y = e.hi;
  }
  x = P.rotate_vertex(x, k);
  y = P.rotate_vertex(y, k);
  return Edge{std::min(x, y), std::max(x, y)};
}

namespace {

// Both functors vanish unless Sigma^{-1} c is a non-member diagonal; they are
// then thin strings on its crossers.
SplitK0Class presentation_class(const PolygonModel& P, const Side& c, bool dual) {
  const auto* a = std::get_if<Arc>(&c);
  if (!a || P.is_side(a->m, a->n)) return {};
  if (!P.is_diagonal(*a)) throw Error(ErrorCode::kArcOutsideModel, "arc " + to_string(*a) + " is not in the polygon");
  const Arc s = P.rotate(*a, -1);
  if (P.has(s)) return SplitK0Class::of(s, -1);
  const auto support = P.crossers(s);
  BoundQuiver Q = BoundQuiver::from_polygon(P);
  if (dual) Q = Q.opposite();
  const Presentation pres = minimal_presentation(Q, {support.begin(), support.end()});
  return pres.p0 - pres.p1;
}

}  // namespace

SplitK0Class index(const PolygonModel& P, const Side& c) { return presentation_class(P, c, false); }

SplitK0Class coindex(const PolygonModel& P, const Side& c) { return presentation_class(P, c, true); }

SplitK0Class index(const PolygonModel& P, std::span<const Arc> objects) {
  SplitK0Class r;
  for (const auto& a : objects) r += index(P, Side{a});
  return r;
}

SplitK0Class coindex(const PolygonModel& P, std::span<const Arc> objects) {
  SplitK0Class r;
  for (const auto& a : objects) r += coindex(P, Side{a});
  return r;
}

SplitK0Class kappa_embed(const SplitK0Class& e, const std::function<bool(const Arc&)>& in_u) {
  for (const auto& [a, c] : e.coeffs()) {
    if (in_u(a)) {
      throw Error(ErrorCode::kSupportMeetsU, "class involves " + to_string(a) + " which lies in U",
                  {{"support_meets_u", {a.m, a.n}}});
    }
  }
  return e;
}

}  // namespace infcc
