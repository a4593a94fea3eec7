#pragma once

#include <span>
#include <utility>
#include <vector>

#include "infcc/laurent.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

/// Thin string module: one-dimensional at each walk vertex, zero elsewhere,
/// structure maps 1 along the walk. forward[i] says the quiver arrow between
/// walk[i] and walk[i+1] runs walk[i] -> walk[i+1].
struct StringModule {
  std::vector<Arc> walk;
  std::vector<bool> forward;

  bool is_zero() const { return walk.empty(); }
  ModClass dimension() const;
  friend bool operator==(const StringModule&, const StringModule&) = default;
};

struct SubmoduleClass {
  ModClass e;
  BigInt chi;
};

/// G c = Hom(-, Sigma c) restricted to T: supported on the members crossing
/// c, in order along c. Throws kInfiniteCrossers for arcs over a fountain.
StringModule g_module(const Triangulation& T, const Arc& c);

/// Re-reads a walk against the triangles of T.
StringModule string_on(const Triangulation& T, std::vector<Arc> walk);

/// All submodule dimension vectors. Every non-empty Grassmannian of a thin
/// string is a point, so each closed vector carries chi = 1.
std::vector<SubmoduleClass> submodule_classes(const StringModule& M);

/// Number of submodules, by a linear pass along the walk.
BigInt count_submodules(const StringModule& M);

/// CC(c) = x^{-coind Sigma c} sum_e chi(Gr_e(G c)) x^{theta(e)} on a polygon
/// triangulation.
LaurentPoly cc_direct(const Triangulation& P, const Arc& c);

/// Submodule classes of a direct sum: chi(Gr_e(M + N)) is the convolution
/// of the two tables.
std::vector<SubmoduleClass> convolve(const std::vector<SubmoduleClass>& a, const std::vector<SubmoduleClass>& b);

/// The direct formula applied to the direct sum of the given objects.
LaurentPoly cc_direct_multiset(const Triangulation& P, std::span<const Arc> objects);

}  // namespace infcc
