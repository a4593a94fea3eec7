#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace infcc {

/// An indecomposable object of the A-infinity cluster category, drawn as an
/// arc (m, n) between non-neighbouring integers on the line. The pair is also
/// the object's coordinate on the AR quiver ZA_infinity.
struct Arc {
  int m = 0;
  int n = 2;

  Arc() = default;
  /// Throws std::invalid_argument unless m <= n - 2.
  Arc(int m_, int n_);

  int width() const { return n - m; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A boundary segment between two vertices. Segments (i, i+1) stand for the
/// zero object; the closing side (lo, hi) of a finite polygon model is an
/// Edge as well. Either way its cluster value is the unit.
struct Edge {
  int lo = 0;
  int hi = 1;

  static Edge segment(int i) { return Edge{i, i + 1}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A side of a quadrilateral or triangle: either an arc or a boundary edge.
using Side = std::variant<Arc, Edge>;

bool is_arc(const Side& s);
std::string to_string(const Arc& a);
std::string to_string(const Side& s);

/// p < r < q < s or r < p < s < q. Symmetric, irreflexive, false on shared
/// endpoints. Encodes dim Ext^1(a, b) = 1.
bool crosses(const Arc& a, const Arc& b);

/// (s, t) spans (u, v) when s <= u < v < t or s < u < v <= t.
bool spans(const Arc& outer, const Arc& inner);

/// Sigma^k on coordinates: (m, n) -> (m - k, n - k).
Arc shift(const Arc& a, int k);

/// Hom(a, b) != 0 in the A-infinity category, i.e. a crosses Sigma^{-1} b.
bool hom_nonzero(const Arc& a, const Arc& b);

/// dim Ext^1(a, b) in {0, 1}.
inline int ext1_dim(const Arc& a, const Arc& b) { return crosses(a, b) ? 1 : 0; }

/// Sorts arcs that all cross `along` (and pairwise do not cross) in the
/// order in which they are met when walking along `along` from its left
/// endpoint to its right endpoint.
void order_along(const Arc& along, std::vector<Arc>& crossing);

/// Orientation of the arrow between two arcs that are sides of a common
/// triangle x < y < z: (x,y) -> (x,z) -> (y,z) -> (x,y). Returns true when
/// the arrow runs a -> b. Both arcs must be sides of the triangle.
bool arrow_runs(const Arc& a, const Arc& b, int x, int y, int z);

}  // namespace infcc

template <>
struct std::hash<infcc::Arc> {
  std::size_t operator()(const infcc::Arc& a) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(a.m) << 32) ^ static_cast<unsigned>(a.n));
  }
};
