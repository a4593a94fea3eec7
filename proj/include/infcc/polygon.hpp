#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "infcc/arc.hpp"

namespace infcc {

/// Exchange data of one flip inside a triangulated polygon.
struct LocalFlip {
  Arc replaced;
  Arc replacement;
  std::array<int, 4> quad;  // increasing, i.e. cyclic order
  /// Middle term c of t* -> c -> t and c' of t -> c' -> t*, as vertex pairs.
  std::array<std::pair<int, int>, 2> middle_c;
  std::array<std::pair<int, int>, 2> middle_c_prime;
};

/// A triangulated polygon on the consecutive vertices lo..hi. The sides are
/// the segments (i, i+1) and the closing side (lo, hi). The closing side is
/// either a boundary edge (finite models, reduced models) or a member arc of
/// an ambient A-infinity triangulation whose spanned members form the
/// diagonals (local models used for computation).
class PolygonModel {
 public:
  PolygonModel(int lo, int hi, std::set<Arc> diagonals, std::optional<Arc> closing_member = {});

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int vertex_count() const { return hi_ - lo_ + 1; }
  const std::set<Arc>& diagonals() const { return diagonals_; }
  const std::optional<Arc>& closing_member() const { return closing_; }

  bool contains_vertex(int v) const { return lo_ <= v && v <= hi_; }
  /// Geometric diagonal of the polygon (member or not).
  bool is_diagonal(int x, int y) const;
  bool is_diagonal(const Arc& a) const { return is_diagonal(a.m, a.n); }
  bool is_side(int x, int y) const;
  bool has(const Arc& a) const { return diagonals_.count(a) > 0; }
  /// Side of the polygon or member diagonal.
  bool connected(int x, int y) const;

  /// Side of the model spanned by two vertices: a boundary Edge for
  /// (i, i+1) and for a boundary closing side; an Arc otherwise.
  Side side_of(int x, int y) const;

  /// Member diagonals crossing d, ordered along d.
  std::vector<Arc> crossers(const Arc& d) const;

  /// Third vertex of the triangle on the inside (between t's endpoints) or
  /// outside of the member or side t.
  std::optional<int> apex(int x, int y, bool inside) const;

  /// Flip of a member diagonal. Throws Error(kUnboundedQuad) if t is not
  /// surrounded by two triangles.
  LocalFlip flip(const Arc& t) const;

  /// Triangles (x < y < z) of the triangulation.
  std::vector<std::array<int, 3>> triangles() const;

  /// Sigma^k acting by rotation of the vertex labels.
  int rotate_vertex(int v, int k) const;
  Arc rotate(const Arc& a, int k) const;

  /// All geometric diagonals, sorted.
  std::vector<Arc> all_diagonals() const;

  /// Pairwise non-crossing, every diagonal inside the polygon, and maximal.
  bool is_triangulation() const;

 private:
  int lo_;
  int hi_;
  std::set<Arc> diagonals_;
  std::optional<Arc> closing_;
};

}  // namespace infcc
