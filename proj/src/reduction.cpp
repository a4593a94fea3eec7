#include "infcc/reduction.hpp"

#include "infcc/error.hpp"
#include "infcc/exchange.hpp"

namespace infcc {

Triangulation ReducedModel::triangulation() const {
  return Triangulation::polygon(polygon.lo(), polygon.hi(), polygon.diagonals());
}

std::vector<Arc> spanned_members(const Triangulation& T, const Arc& t) {
  std::vector<Arc> out;
  for (const auto& a : T.members_within(t.m, t.n)) {
    if (spans(t, a)) out.push_back(a);
  }
  return out;
}

USpec u_of(const Triangulation& T, const Arc& t) {
  if (!T.contains(t)) {
    throw Error(ErrorCode::kNotAMember, "arc " + to_string(t) + " is not a member", {{"not_a_member", {t.m, t.n}}});
  }
  const auto s = spanned_members(T, t);
  return USpec{T, {s.begin(), s.end()}, t};
}

ReducedModel reduce(const Triangulation& T, const Arc& t) {
  const USpec U = u_of(T, t);
  return ReducedModel{t, PolygonModel(t.m, t.n, U.complement), static_cast<int>(U.complement.size())};
}

bool perp(const Arc& d, const USpec& U, int k) {
  const Triangulation& T = U.ambient;
  if (T.is_polygon()) {
    const PolygonModel P = T.polygon_model();
    const int x = P.rotate_vertex(d.m, 1 - k), y = P.rotate_vertex(d.n, 1 - k);
    if (P.is_side(x, y)) return true;
    const Arc e{std::min(x, y), std::max(x, y)};
    for (const auto& u : P.crossers(e)) {
      if (U.contains(u)) return false;
    }
    return true;
  }
  const CrosserList cl = T.crossers(shift(d, 1 - k));
  if (cl.infinite) return false;  // infinitely many crossers, only finitely many outside U
  for (const auto& u : cl.arcs) {
    if (U.contains(u)) return false;
  }
  return true;
}

StringModule pi_star(const StringModule& M, const USpec& U) {
  for (const auto& a : M.walk) {
    if (U.contains(a)) {
      throw Error(ErrorCode::kSupportMeetsU, "module does not vanish on U at " + to_string(a),
                  {{"support_meets_u", {a.m, a.n}}});
    }
  }
  return string_on(U.ambient, M.walk);
}

LaurentPoly cc_bar(const Triangulation& T, const USpec& U, const Arc& d) {
  return cc(T, d).substitute_unit_if([&](const Arc& a) { return U.contains(a); });
}

std::optional<Arc> choose_bounded_u(const Triangulation& T, const Arc& c, int max_width) {
  std::vector<Arc> tests;
  for (const auto& u : T.crossers(c).arcs) tests.push_back(T.flip(u).replacement);
  for (int w = c.width() + 1; w <= max_width; ++w) {
    for (int m = c.n - w; m <= c.m; ++m) {
      const Arc t{m, m + w};
      if (!spans(t, c) || !T.contains(t)) continue;
      const USpec U = u_of(T, t);
      bool ok = perp(c, U, 1) && perp(c, U, 2);
      for (const auto& s : tests) {
        for (int k = 0; ok && k <= 2; ++k) ok = perp(s, U, k);
      }
      if (ok) return t;
    }
  }
  return std::nullopt;
}

}  // namespace infcc
