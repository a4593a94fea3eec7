#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "infcc/arc.hpp"
#include "infcc/laurent.hpp"
#include "infcc/polygon.hpp"

namespace infcc {

/// Quiver with relations of a triangulated polygon: one vertex per member
/// diagonal, one arrow per pair of diagonals on a common triangle, and the
/// composite of two arrows on the same triangle is zero.
class BoundQuiver {
 public:
  struct Arrow {
    int src;
    int dst;
    int triangle;
  };

  static BoundQuiver from_polygon(const PolygonModel& model);
  BoundQuiver opposite() const;

  const std::vector<Arc>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int index_of(const Arc& a) const;

  /// Non-zero paths from vertex `from` to vertex `to`, as arrow index lists.
  std::vector<std::vector<int>> paths(int from, int to) const;

 private:
  std::vector<Arc> vertices_;
  std::map<Arc, int> index_;
  std::vector<Arrow> arrows_;
};

/// Multiplicities of P_0 and P_1 in a minimal projective presentation
/// P_1 -> P_0 -> M -> 0, reported as classes on the vertices.
struct Presentation {
  SplitK0Class p0;
  SplitK0Class p1;
};

/// Minimal projective presentation of the thin module supported on
/// `support`, with every arrow between support vertices acting by 1.
/// Modules are contravariant: an arrow a -> b acts M(b) -> M(a), and the
/// projective at v is spanned by the non-zero paths ending at v.
Presentation minimal_presentation(const BoundQuiver& Q, const std::set<Arc>& support);

namespace gf {

constexpr std::uint64_t kPrime = 2147483647ULL;

using Vec = std::vector<std::uint64_t>;

/// Rank of the span of the given vectors.
int rank(std::vector<Vec> rows);
/// Basis of {x : A x = 0} for a matrix given by rows (cols = x length).
std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t cols);

}  // namespace gf

}  // namespace infcc
