#pragma once

#include <random>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "infcc/arc.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

using Rng = std::mt19937_64;

/// Every triangulation of the polygon lo..hi, as diagonal sets.
std::vector<std::set<Arc>> all_polygon_triangulations(int lo, int hi);
std::set<Arc> random_polygon_triangulation(int lo, int hi, Rng& rng);

/// Frontier word of the given length using both letters.
std::string random_frontier_word(std::size_t length, Rng& rng);

int uniform_int(Rng& rng, int lo, int hi);

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  if (v.empty()) throw std::out_of_range("pick from an empty vector");
  return v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(v.size()) - 1))];
}

}  // namespace infcc
