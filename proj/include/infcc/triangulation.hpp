#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infcc/arc.hpp"
#include "infcc/polygon.hpp"

namespace infcc {

/// Arcs {(m, n) : m <= n-2} ∪ {(n, p) : p >= n+2}.
struct FountainBase {
  int n = 0;
  friend bool operator==(const FountainBase&, const FountainBase&) = default;
};

/// Locally finite zig-zag: starts at (anchor, anchor+2); each step moves the
/// left endpoint one to the left ('L') or the right endpoint one to the right
/// ('R'). The word gives the first steps, after which the steps alternate.
/// An empty word is the nested zig-zag (a,a+2), (a-1,a+2), (a-1,a+3), ...
struct ZigzagBase {
  int anchor = 0;
  std::string word;
  friend bool operator==(const ZigzagBase&, const ZigzagBase&) = default;
};

/// Finite polygon on vertices lo..hi with the given diagonals.
struct PolygonBase {
  int lo = 0;
  int hi = 3;
  std::set<Arc> diagonals;
  friend bool operator==(const PolygonBase&, const PolygonBase&) = default;
};

using TriangulationBase = std::variant<FountainBase, ZigzagBase, PolygonBase>;

struct TriangulationSpec {
  TriangulationBase base;
  std::vector<Arc> flips;
};

enum class ClassKind { kLocallyFinite, kFountain, kFinitePolygon };

struct Classification {
  ClassKind kind = ClassKind::kLocallyFinite;
  int fountain = 0;  // meaningful for kFountain only
  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string to_string(const Classification& c);

/// Members of T crossing an arc, in order along the arc; `infinite` is set
/// when the arc straddles a fountain.
struct CrosserList {
  bool infinite = false;
  std::vector<Arc> arcs;
};

struct Diagnosis {
  std::vector<std::pair<Arc, Arc>> crossing_pairs;
  std::vector<Arc> addable;       // non-members inside the window crossing no member
  std::vector<Arc> out_of_model;  // polygon diagonals that are not diagonals of the polygon
  bool valid() const { return crossing_pairs.empty() && addable.empty() && out_of_model.empty(); }
};

struct Quiver {
  std::vector<Arc> vertices;
  std::vector<std::pair<Arc, Arc>> arrows;  // (source, target)

  bool has_loops() const;
  bool has_two_cycles() const;
};

class Triangulation;

struct FlipResult;

/// A cluster tilting subcategory of the A-infinity cluster category (or of a
/// polygon model), given by a base family and a finite list of flips.
/// Values are immutable; flip() returns a new triangulation.
class Triangulation {
 public:
  static Triangulation fountain(int n);
  static Triangulation nested_zigzag(int anchor);
  static Triangulation zigzag(int anchor, std::string word);
  static Triangulation polygon(int lo, int hi, std::set<Arc> diagonals);
  /// Applies the flips left to right; throws kFlipTargetNotMember.
  static Triangulation build(const TriangulationSpec& spec);

  const TriangulationBase& base() const { return base_; }
  const std::vector<Arc>& flips() const { return flips_; }
  TriangulationSpec spec() const { return {base_, flips_}; }

  Classification classify() const;
  bool is_polygon() const { return std::holds_alternative<PolygonBase>(base_); }
  bool is_locally_finite() const { return std::holds_alternative<ZigzagBase>(base_); }
  std::optional<int> fountain_vertex() const;

  bool contains(const Arc& a) const;
  /// Members with both endpoints in [lo, hi].
  std::vector<Arc> members_within(int lo, int hi) const;
  /// Members with at least one endpoint in [lo, hi]. Throws kNotLocallyFinite
  /// when the window holds a fountain vertex.
  std::vector<Arc> members_meeting(int lo, int hi) const;
  /// Side (i,i+1), closing side of a polygon base, or member.
  bool connected(int x, int y) const;
  Side side_of(int x, int y) const;

  /// Some member spanning d, preferring the innermost one.
  std::optional<Arc> spanning_arc(const Arc& d) const;
  CrosserList crossers(const Arc& d) const;

  /// The finite polygon in which d lives as a diagonal: the whole polygon
  /// for a polygon base, otherwise the polygon cut out by a spanning member
  /// (closing side carrying that member). Throws kUnreachable when no
  /// member spans d, kArcOutsideModel for arcs outside a polygon base.
  PolygonModel local_model(const Arc& d) const;
  /// Whole model of a polygon base; throws kNotAPolygon otherwise.
  PolygonModel polygon_model() const;

  FlipResult flip(const Arc& t) const;
  Triangulation flipped(const Arc& t) const;

  Diagnosis validate_window(int lo, int hi) const;

  /// Triangle x < y < z having both arcs as sides, if any.
  std::optional<std::array<int, 3>> shared_triangle(const Arc& a, const Arc& b) const;
  Quiver quiver(int lo, int hi) const;
  Quiver quiver(std::vector<Arc> vertices) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.base_ == b.base_ && a.added_ == b.added_ && a.removed_ == b.removed_;
  }

 private:
  explicit Triangulation(TriangulationBase base) : base_(std::move(base)) {}

  bool base_contains(const Arc& a) const;
  std::vector<Arc> base_within(int lo, int hi) const;
  Arc zigzag_arc(const ZigzagBase& z, int k) const;
  std::pair<int, int> validation_box(int lo, int hi) const;

  TriangulationBase base_;
  std::vector<Arc> flips_;
  std::set<Arc> added_;    // members not in the base family
  std::set<Arc> removed_;  // base arcs flipped away
};

struct FlipResult {
  Triangulation new_triangulation;
  Arc replaced;
  Arc replacement;
  std::array<int, 4> quad;
  std::array<Side, 2> middle_c;
  std::array<Side, 2> middle_c_prime;
};

/// Parses the CLI shorthand (fountain:0, zigzag:0[:word], polygon:0-4:0.2,0.3)
/// or a JSON TriangulationSpec when the text starts with '{'.
TriangulationSpec parse_triangulation_spec(const std::string& text);

}  // namespace infcc
