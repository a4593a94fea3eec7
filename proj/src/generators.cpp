#include "infcc/generators.hpp"

#include <functional>

namespace infcc {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::set<Arc>> all_polygon_triangulations(int lo, int hi) {
  // Triangulations of the sub-polygon x..y (side (x,y) included as base).
  std::function<std::vector<std::set<Arc>>(int, int)> sub = [&](int x, int y) -> std::vector<std::set<Arc>> {
    if (y - x < 2) return {{}};
    std::vector<std::set<Arc>> out;
    for (int apex = x + 1; apex < y; ++apex) {
      for (const auto& left : sub(x, apex)) {
        for (const auto& right : sub(apex, y)) {
          std::set<Arc> s = left;
          s.insert(right.begin(), right.end());
          if (apex - x >= 2) s.insert(Arc{x, apex});
          if (y - apex >= 2) s.insert(Arc{apex, y});
          out.push_back(std::move(s));
        }
      }
    }
    return out;
  };
  return sub(lo, hi);
}

std::set<Arc> random_polygon_triangulation(int lo, int hi, Rng& rng) {
  std::set<Arc> out;
  std::function<void(int, int)> sub = [&](int x, int y) {
    if (y - x < 2) return;
    const int apex = uniform_int(rng, x + 1, y - 1);
    if (apex - x >= 2) out.insert(Arc{x, apex});
    if (y - apex >= 2) out.insert(Arc{apex, y});
    sub(x, apex);
    sub(apex, y);
  };
  sub(lo, hi);
  return out;
}

std::string random_frontier_word(std::size_t length, Rng& rng) {
  if (length < 2) length = 2;
  std::string w;
  while (w.find('R') == std::string::npos || w.find('U') == std::string::npos) {
    w.clear();
    for (std::size_t i = 0; i < length; ++i) w.push_back(uniform_int(rng, 0, 1) ? 'R' : 'U');
  }
  return w;
}

}  // namespace infcc
