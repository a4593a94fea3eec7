#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infcc/laurent.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

enum class Region { kAll, kEMinus, kEPlus, kAbove, kOutside };

std::string to_string(Region r);

struct ReachabilityVerdict {
  bool reachable = true;
  Region region = Region::kAll;
  int fountain = 0;  // vertex n for the fountain regions
};

/// Reachable objects: everything for locally finite T; for a fountain at n
/// the arcs on or below one of the two halflines. Arcs ending at n count as
/// reachable (they lie on a halfline).
ReachabilityVerdict is_reachable(const Triangulation& T, const Arc& d);

/// Cluster map of T on reachable objects, computed by Ptolemy recursion in
/// the finite polygon cut out by a spanning member. Values are cached for the
/// lifetime of the object, so one instance per triangulation and thread.
class ClusterMap {
 public:
  explicit ClusterMap(Triangulation T) : T_(std::move(T)) {}

  const Triangulation& triangulation() const { return T_; }

  /// Throws Error(kUnreachable) outside the reachable region.
  LaurentPoly cc(const Arc& d);
  LaurentPoly cc(const Side& s);
  /// Product over a multiset; the empty product is 1.
  LaurentPoly cc_multiset(std::span<const Arc> objects);
  LaurentPoly cc_sides(std::span<const Side> sides);

 private:
  LaurentPoly cc_in(const PolygonModel& model, const Arc& d, int depth);
  LaurentPoly side_value(const PolygonModel& model, int x, int y, int depth);

  Triangulation T_;
  std::map<Arc, LaurentPoly> memo_;
};

/// One-shot convenience wrapper.
LaurentPoly cc(const Triangulation& T, const Arc& d);

}  // namespace infcc
