#include "doctest.h"

#include "infcc/error.hpp"
#include "infcc/generators.hpp"
#include "infcc/tilings.hpp"

using namespace infcc;

TEST_CASE("nested zigzag tiling values") {
  const auto Z = Triangulation::nested_zigzag(0);
  const TilingWindow W = tiling_window(Z, -8, 8);
  CHECK(W.at(0, 3) == 2);
  CHECK(W.at(1, 3) == 3);
  CHECK(W.at(2, 4) == 3);
  CHECK(W.at(1, 4) == 8);
  CHECK(W.at(0, 4) == 5);
  CHECK(verify_sl2(W).empty());
  for (const auto& [cell, v] : W.values) CHECK(v >= 1);
  CHECK(tiling_window_by_recurrence(Z, -8, 8).values == W.values);
}

TEST_CASE("both tiling oracles agree on random zigzags") {
  Rng rng(41);
  for (int r = 0; r < 25; ++r) {
    std::string word;
    const int len = uniform_int(rng, 0, 10);
    for (int k = 0; k < len; ++k) word += uniform_int(rng, 0, 1) ? 'L' : 'R';
    Triangulation T = Triangulation::zigzag(uniform_int(rng, -2, 2), word);
    for (int k = 0; k < 3; ++k) {
      const std::vector<Arc> inner = T.members_within(-6, 6);
      if (!inner.empty()) T = T.flipped(pick(inner, rng));
    }
    const TilingWindow W = tiling_window(T, -6, 6);
    CHECK(verify_sl2(W).empty());
    CHECK(tiling_window_by_recurrence(T, -6, 6).values == W.values);
  }
}

TEST_CASE("tilings refuse fountains") {
  try {
    tiling_window(Triangulation::fountain(0), -3, 3);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotLocallyFinite);
    CHECK(e.is_refusal());
  }
}

TEST_CASE("determinant violations are reported") {
  TilingWindow W = tiling_window(Triangulation::nested_zigzag(0), -4, 4);
  W.values[{1, 4}] += 1;
  CHECK_FALSE(verify_sl2(W).empty());
}

TEST_CASE("frontier walks") {
  const Frontier F{"RRU", {0, 2}};
  CHECK(frontier_point(F, 0) == Cell{0, 2});
  CHECK(frontier_point(F, 1) == Cell{0, 3});
  CHECK(frontier_point(F, 3) == Cell{-1, 4});
  CHECK(frontier_step(F, 3) == 'R');  // alternates after the word
  CHECK(frontier_step(F, 4) == 'U');
  CHECK(frontier_step(F, -1) == 'U');
  CHECK(frontier_point(F, -1) == Cell{1, 2});
  CHECK_THROWS_AS(check_admissible(Frontier{"RRRR"}), Error);
  CHECK_THROWS_AS(check_admissible(Frontier{"RUX"}), Error);
  CHECK_NOTHROW(check_admissible(F));
}

TEST_CASE("the alternating frontier is the nested zigzag") {
  const Frontier F{"URURURUR"};
  CHECK(frontier_to_triangulation(F) == Triangulation::nested_zigzag(0));
  const TilingWindow W = extend_frontier(F, -6, -6, 6, 6);
  CHECK(verify_sl2(W).empty());
  const TilingWindow R = tiling_window(frontier_to_triangulation(F), -6, 6);
  int compared = 0;
  for (const auto& [cell, v] : determined_region(F, -6, -6, 6, 6)) {
    if (!R.has(cell.first, cell.second)) continue;
    ++compared;
    CHECK(v == R.at(cell.first, cell.second));
    CHECK(W.at(cell.first, cell.second) == v);
  }
  CHECK(compared > 0);
}

TEST_CASE("random frontiers give positive integer tilings") {
  Rng rng(43);
  for (int r = 0; r < 10; ++r) {
    const Frontier F{random_frontier_word(static_cast<std::size_t>(uniform_int(rng, 2, 12)), rng)};
    const TilingWindow W = extend_frontier(F, -6, -6, 6, 6);
    CHECK(verify_sl2(W).empty());
    for (const auto& [cell, v] : W.values) CHECK(v >= 1);
    for (long k = -10; k <= 10; ++k) {
      const Cell p = frontier_point(F, k);
      if (W.has(p.first, p.second)) CHECK(W.at(p.first, p.second) == 1);
    }
  }
}
