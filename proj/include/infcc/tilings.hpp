#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infcc/laurent.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

using Cell = std::pair<int, int>;  // (i, j)

/// Rectangle [i0,i1] x [j0,j1] of integer values. Half-plane windows only
/// hold cells with j - i >= 2.
struct TilingWindow {
  int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
  bool half_plane = true;
  std::map<Cell, BigInt> values;

  bool has(int i, int j) const { return values.count({i, j}) > 0; }
  const BigInt& at(int i, int j) const { return values.at({i, j}); }
};

struct Violation {
  std::string relation;  // "det" or "edge"
  Cell cell;
  BigInt lhs;
  BigInt rhs;
};

/// r(i,j) = number of submodules of G(i,j), for lo <= i, j <= hi, j-i >= 2.
/// Throws kNotLocallyFinite unless T is locally finite.
TilingWindow tiling_window(const Triangulation& T, int lo, int hi);

/// Same window from the members' degrees on the width-2 row and the two
/// determinant relations; throws kExactnessFailure on an inexact division.
TilingWindow tiling_window_by_recurrence(const Triangulation& T, int lo, int hi);

/// Unimodular 2x2 determinants on every complete square, plus the edge
/// relation r(i,i+2) r(i+1,i+3) - r(i,i+3) = 1 on half-plane windows.
std::vector<Violation> verify_sl2(const TilingWindow& W);

/// Lattice path of 1's: 'R' steps (i, j+1), 'U' steps (i-1, j). The word
/// gives the steps after the start cell; outside it the steps alternate.
struct Frontier {
  std::string word;
  Cell start{0, 2};
};

/// Throws kNonAdmissibleFrontier unless both letters occur.
void check_admissible(const Frontier& F);

/// Step taken after point k (k may be negative).
char frontier_step(const Frontier& F, long k);
/// Point number k; point 0 is the start cell.
Cell frontier_point(const Frontier& F, long k);

/// The tiling of Z^2 in which the frontier holds 1's, on [i0,i1] x [j0,j1].
TilingWindow extend_frontier(const Frontier& F, int i0, int j0, int i1, int j1);

/// The zig-zag whose arcs are the frontier points inside Q.
Triangulation frontier_to_triangulation(const Frontier& F);

/// Cells of Q inside the box whose value is forced by the determinant
/// relation from the frontier points in Q alone, with those values.
std::map<Cell, BigInt> determined_region(const Frontier& F, int i0, int j0, int i1, int j1);

}  // namespace infcc
