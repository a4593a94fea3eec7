#pragma once

#include <optional>
#include <set>
#include <vector>

#include "infcc/cc_direct.hpp"
#include "infcc/laurent.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

/// A cofinite subset U of the members of T, stored as its finite complement.
/// u_of(T, t) gives U(t), the members not spanned by t.
struct USpec {
  Triangulation ambient;
  std::set<Arc> complement;   // T \ U
  std::optional<Arc> defining;

  bool contains(const Arc& a) const { return ambient.contains(a) && !complement.count(a); }
};

struct ReducedModel {
  Arc t;
  PolygonModel polygon;  // vertices t.m..t.n, closing side a boundary edge
  int rank = 0;          // number of spanned members

  Triangulation triangulation() const;
};

std::vector<Arc> spanned_members(const Triangulation& T, const Arc& t);

USpec u_of(const Triangulation& T, const Arc& t);
ReducedModel reduce(const Triangulation& T, const Arc& t);

/// Hom(d, Sigma^k u) = 0 for every u in U (k = 0, 1, 2).
bool perp(const Arc& d, const USpec& U, int k);

/// Same walk, arrow directions re-read from the ambient triangles.
StringModule pi_star(const StringModule& M, const USpec& U);

/// cc(T, d) with x_u = 1 for u in U.
LaurentPoly cc_bar(const Triangulation& T, const USpec& U, const Arc& d);

/// Spanning member t of c, grown outward until c and the flip replacements
/// of the members crossing c satisfy the perpendicularity conditions
/// against U(t). Returns nothing if no candidate within `max_width` works.
std::optional<Arc> choose_bounded_u(const Triangulation& T, const Arc& c, int max_width = 64);

}  // namespace infcc
