#include "doctest.h"

#include "infcc/error.hpp"
#include "infcc/generators.hpp"
#include "infcc/serialize.hpp"
#include "infcc/triangulation.hpp"

using namespace infcc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kParse;
}

Triangulation random_flips(Triangulation T, int lo, int hi, int count, Rng& rng, std::vector<Arc>* replacements = nullptr) {
  for (int k = 0; k < count; ++k) {
    std::vector<Arc> members = T.members_within(lo, hi);
    if (members.empty()) break;
    const Arc t = pick(members, rng);
    FlipResult f = T.flip(t);
    if (replacements) replacements->push_back(f.replacement);
    T = f.new_triangulation;
  }
  return T;
}

}  // namespace

TEST_CASE("base families") {
  const auto F = Triangulation::fountain(0);
  CHECK(F.contains(Arc{-5, 0}));
  CHECK(F.contains(Arc{0, 7}));
  CHECK_FALSE(F.contains(Arc{-1, 1}));
  CHECK(F.classify() == Classification{ClassKind::kFountain, 0});
  CHECK(F.fountain_vertex() == 0);

  const auto Z = Triangulation::nested_zigzag(0);
  for (Arc a : {Arc{0, 2}, Arc{-1, 2}, Arc{-1, 3}, Arc{-2, 3}, Arc{-2, 4}}) CHECK(Z.contains(a));
  CHECK_FALSE(Z.contains(Arc{0, 3}));
  CHECK(Z.classify().kind == ClassKind::kLocallyFinite);
  CHECK(Z.is_locally_finite());

  const auto P = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}});
  CHECK(P.classify().kind == ClassKind::kFinitePolygon);
  CHECK(code_of([] { Triangulation::fountain(0).polygon_model(); }) == ErrorCode::kNotAPolygon);
}

TEST_CASE("zigzag words are canonical") {
  CHECK(Triangulation::zigzag(0, "LRLRLR") == Triangulation::nested_zigzag(0));
  CHECK(Triangulation::zigzag(0, "") == Triangulation::nested_zigzag(0));
  const auto Z = Triangulation::zigzag(0, "RRL");
  for (Arc a : {Arc{0, 2}, Arc{0, 3}, Arc{0, 4}, Arc{-1, 4}, Arc{-1, 5}}) CHECK(Z.contains(a));
  CHECK_FALSE(Z.contains(Arc{-1, 2}));
  CHECK_THROWS(Triangulation::zigzag(0, "RXL"));
}

TEST_CASE("crossers of the nested zigzag") {
  const auto Z = Triangulation::nested_zigzag(0);
  CHECK(Z.crossers(Arc{0, 3}).arcs == std::vector<Arc>{Arc{-1, 2}});
  CHECK(Z.crossers(Arc{1, 3}).arcs == std::vector<Arc>{Arc{0, 2}, Arc{-1, 2}});
  CHECK(Z.crossers(Arc{1, 4}).arcs == std::vector<Arc>{Arc{0, 2}, Arc{-1, 2}, Arc{-1, 3}, Arc{-2, 3}});
  CHECK(Z.crossers(Arc{-1, 2}).arcs.empty());
}

TEST_CASE("fountain crossers and local models") {
  const auto F = Triangulation::fountain(0);
  CHECK(F.crossers(Arc{-1, 1}).infinite);
  CHECK(F.crossers(Arc{-3, -1}).arcs == std::vector<Arc>{Arc{-2, 0}});
  try {
    F.local_model(Arc{-1, 1});
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnreachable);
    CHECK(e.is_refusal());
    CHECK(e.detail() == json{{"unreachable", {{"fountain", 0}}}});
  }
  CHECK(code_of([&] { F.members_meeting(-2, 2); }) == ErrorCode::kNotLocallyFinite);
  const auto P = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}});
  CHECK(code_of([&] { P.local_model(Arc{2, 6}); }) == ErrorCode::kArcOutsideModel);
}

TEST_CASE("flip in a pentagon") {
  const auto P = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}});
  const FlipResult f = P.flip(Arc{0, 2});
  CHECK(f.replacement == Arc{1, 3});
  CHECK(f.quad == std::array<int, 4>{0, 1, 2, 3});
  CHECK(f.middle_c == std::array<Side, 2>{Side{Edge{0, 1}}, Side{Edge{2, 3}}});
  CHECK(f.middle_c_prime == std::array<Side, 2>{Side{Edge{1, 2}}, Side{Arc{0, 3}}});
  CHECK(f.new_triangulation.contains(Arc{1, 3}));
  CHECK_FALSE(f.new_triangulation.contains(Arc{0, 2}));
  CHECK(code_of([&] { P.flip(Arc{1, 3}); }) == ErrorCode::kNotAMember);
  TriangulationSpec bad{PolygonBase{0, 4, {Arc{0, 2}, Arc{0, 3}}}, {Arc{0, 2}, Arc{0, 2}}};
  CHECK(code_of([&] { Triangulation::build(bad); }) == ErrorCode::kFlipTargetNotMember);
}

TEST_CASE("flip then flip back restores the triangulation") {
  Rng rng(3);
  const std::vector<Triangulation> bases{Triangulation::fountain(0), Triangulation::nested_zigzag(0),
                                         Triangulation::zigzag(1, "RRLLR")};
  for (int r = 0; r < 300; ++r) {
    const Triangulation& T0 = bases[static_cast<std::size_t>(r) % bases.size()];
    std::vector<Arc> reps;
    Triangulation T = random_flips(T0, -6, 6, uniform_int(rng, 1, 8), rng, &reps);
    CHECK(T.validate_window(-6, 6).valid());
    for (auto it = reps.rbegin(); it != reps.rend(); ++it) T = T.flipped(*it);
    CHECK(T == T0);
  }
}

TEST_CASE("random polygon triangulations are valid") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const int n = uniform_int(rng, 4, 12);
    const auto d = random_polygon_triangulation(0, n - 1, rng);
    CHECK(static_cast<int>(d.size()) == n - 3);
    const auto T = Triangulation::polygon(0, n - 1, d);
    CHECK(T.validate_window(0, n - 1).valid());
  }
  // Catalan numbers
  CHECK(all_polygon_triangulations(0, 4).size() == 5);
  CHECK(all_polygon_triangulations(0, 5).size() == 14);
  CHECK(all_polygon_triangulations(0, 6).size() == 42);
}

TEST_CASE("validation reports problems") {
  const auto Z = Triangulation::nested_zigzag(0);
  CHECK(Z.validate_window(-5, 5).valid());
  const Diagnosis crossing = Triangulation::polygon(0, 5, {Arc{0, 2}, Arc{1, 3}}).validate_window(0, 5);
  CHECK(crossing.crossing_pairs.size() == 1);
  CHECK_FALSE(crossing.valid());
  const Diagnosis sparse = Triangulation::polygon(0, 4, {Arc{0, 2}}).validate_window(0, 4);
  CHECK(sparse.crossing_pairs.empty());
  CHECK(sparse.addable == std::vector<Arc>{Arc{0, 3}, Arc{2, 4}});
  const Diagnosis outside = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}, Arc{3, 6}}).validate_window(0, 4);
  CHECK(outside.out_of_model == std::vector<Arc>{Arc{3, 6}});
}

TEST_CASE("quivers have no loops or two-cycles") {
  const auto P = Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}});
  const Quiver Q = P.quiver(0, 4);
  CHECK(Q.arrows == std::vector<std::pair<Arc, Arc>>{{Arc{0, 2}, Arc{0, 3}}});
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const auto T = random_flips(Triangulation::nested_zigzag(0), -5, 5, 6, rng);
    const Quiver q = T.quiver(-6, 6);
    CHECK_FALSE(q.has_loops());
    CHECK_FALSE(q.has_two_cycles());
  }
}

TEST_CASE("triangulation specs parse") {
  CHECK(Triangulation::build(parse_triangulation_spec("fountain:-2")) == Triangulation::fountain(-2));
  CHECK(Triangulation::build(parse_triangulation_spec("zigzag:0")) == Triangulation::nested_zigzag(0));
  CHECK(Triangulation::build(parse_triangulation_spec("polygon:0-4:0.2,0.3")) ==
        Triangulation::polygon(0, 4, {Arc{0, 2}, Arc{0, 3}}));
  const std::string js = R"({"base":{"kind":"zigzag","anchor":1,"word":"RRL"},"flips":[[1,3]]})";
  const auto spec = parse_triangulation_spec(js);
  CHECK(spec.flips == std::vector<Arc>{Arc{1, 3}});
  CHECK(spec_from_json(to_json(spec)).flips == spec.flips);
  CHECK(code_of([] { parse_triangulation_spec("torus:3"); }) == ErrorCode::kUnknownFamily);
  CHECK(code_of([] { parse_triangulation_spec("fountain:x"); }) == ErrorCode::kParse);
}
