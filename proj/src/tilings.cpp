#include "infcc/tilings.hpp"

#include <algorithm>
#include <stdexcept>

#include "infcc/cc_direct.hpp"
#include "infcc/error.hpp"

namespace infcc {

namespace {

void require_locally_finite(const Triangulation& T) {
  if (T.is_locally_finite()) return;
  nlohmann::json detail = {{"not_locally_finite", to_string(T.classify())}};
  if (auto n = T.fountain_vertex()) detail = {{"not_locally_finite", {{"fountain", *n}}}};
  throw Error(ErrorCode::kNotLocallyFinite, "tilings need a locally finite triangulation", detail);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const Cell& c) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorCode::kExactnessFailure,
                "inexact division at (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")",
                {{"exactness_failure", {c.first, c.second}}});
  }
  return num / den;
}

}  // namespace

TilingWindow tiling_window(const Triangulation& T, int lo, int hi) {
  require_locally_finite(T);
  TilingWindow W{lo, hi, lo, hi, true, {}};
  for (int i = lo; i <= hi; ++i) {
    for (int j = i + 2; j <= hi; ++j) W.values[{i, j}] = count_submodules(g_module(T, Arc{i, j}));
  }
  return W;
}

TilingWindow tiling_window_by_recurrence(const Triangulation& T, int lo, int hi) {
  require_locally_finite(T);
  TilingWindow W{lo, hi, lo, hi, true, {}};
  auto& r = W.values;
  for (int i = lo; i + 2 <= hi; ++i) {
    r[{i, i + 2}] = 1 + static_cast<long>(T.members_meeting(i + 1, i + 1).size());
  }
  for (int i = lo; i + 3 <= hi; ++i) r[{i, i + 3}] = r[{i, i + 2}] * r[{i + 1, i + 3}] - 1;
  for (int w = 4; w <= hi - lo; ++w) {
    for (int i = lo; i + w <= hi; ++i) {
      const int j = i + w - 1;
      r[{i, j + 1}] = exact_div(r[{i, j}] * r[{i + 1, j + 1}] - 1, r[{i + 1, j}], {i, j + 1});
    }
  }
  return W;
}

std::vector<Violation> verify_sl2(const TilingWindow& W) {
  std::vector<Violation> out;
  for (const auto& [c, v] : W.values) {
    const auto [i, j] = c;
    if (W.has(i, j + 1) && W.has(i + 1, j) && W.has(i + 1, j + 1)) {
      BigInt det = v * W.at(i + 1, j + 1) - W.at(i, j + 1) * W.at(i + 1, j);
      if (det != 1) out.push_back({"det", c, det, 1});
    }
    if (W.half_plane && j == i + 2 && W.has(i + 1, i + 3) && W.has(i, i + 3)) {
      BigInt lhs = v * W.at(i + 1, i + 3) - W.at(i, i + 3);
      if (lhs != 1) out.push_back({"edge", c, lhs, 1});
    }
  }
  return out;
}

void check_admissible(const Frontier& F) {
  const bool has_r = F.word.find('R') != std::string::npos;
  const bool has_u = F.word.find('U') != std::string::npos;
  const bool clean = F.word.find_first_not_of("RU") == std::string::npos;
  if (!has_r || !has_u || !clean) {
    throw Error(ErrorCode::kNonAdmissibleFrontier, "frontier word must use both R and U and nothing else",
                {{"non_admissible_frontier", F.word}});
  }
}

char frontier_step(const Frontier& F, long k) {
  const long L = static_cast<long>(F.word.size());
  auto flip = [](char c) { return c == 'R' ? 'U' : 'R'; };
  if (k >= 0 && k < L) return F.word[static_cast<std::size_t>(k)];
  if (k >= L) return (k - L) % 2 == 0 ? flip(F.word.back()) : F.word.back();
  return (-k) % 2 == 1 ? flip(F.word.front()) : F.word.front();
}

Cell frontier_point(const Frontier& F, long k) {
  Cell p = F.start;
  auto apply = [&](char s, int sign) {
    if (s == 'R') {
      p.second += sign;
    } else {
      p.first -= sign;
    }
  };
  for (long s = 0; s < k; ++s) apply(frontier_step(F, s), 1);
  for (long s = -1; s >= k; --s) apply(frontier_step(F, s), -1);
  return p;
}

namespace {

struct Box {
  int i0, j0, i1, j1;
  bool in(int i, int j) const { return i >= i0 && i <= i1 && j >= j0 && j <= j1; }
};

// Seeds the frontier points inside the box (optionally only those in Q) and
// fills squares until nothing changes.
std::map<Cell, BigInt> propagate(const Frontier& F, const Box& box, bool q_only) {
  std::map<Cell, BigInt> v;
  const long span = static_cast<long>(box.i1 - box.i0) + (box.j1 - box.j0) + 4;
  const long reach = span + static_cast<long>(F.word.size()) +
                     std::abs(F.start.first) + std::abs(F.start.second) + std::abs(box.i0) + std::abs(box.j1) + 8;
  for (long k = -2 * reach; k <= 2 * reach; ++k) {
    const Cell p = frontier_point(F, k);
    if (box.in(p.first, p.second) && (!q_only || p.second - p.first >= 2)) v[p] = 1;
  }
  auto in_region = [&](int i, int j) { return box.in(i, j) && (!q_only || j - i >= 2); };
  auto get = [&](int i, int j) -> const BigInt* {
    auto it = v.find({i, j});
    return it == v.end() ? nullptr : &it->second;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = box.i0; i < box.i1; ++i) {
      for (int j = box.j0; j < box.j1; ++j) {
        if (!in_region(i, j) || !in_region(i, j + 1) || !in_region(i + 1, j) || !in_region(i + 1, j + 1)) continue;
        const BigInt* a = get(i, j);
        const BigInt* b = get(i, j + 1);
        const BigInt* c = get(i + 1, j);
        const BigInt* d = get(i + 1, j + 1);
        const int known = (a != nullptr) + (b != nullptr) + (c != nullptr) + (d != nullptr);
        if (known != 3) continue;
        if (!d) {
          v[{i + 1, j + 1}] = exact_div(1 + (*b) * (*c), *a, {i + 1, j + 1});
        } else if (!a) {
          v[{i, j}] = exact_div(1 + (*b) * (*c), *d, {i, j});
        } else if (!b) {
          v[{i, j + 1}] = exact_div((*a) * (*d) - 1, *c, {i, j + 1});
        } else {
          v[{i + 1, j}] = exact_div((*a) * (*d) - 1, *b, {i + 1, j});
        }
        changed = true;
      }
    }
  }
  for (const auto& [cell, val] : v) {
    if (val <= 0) {
      throw Error(ErrorCode::kExactnessFailure, "non-positive value in frontier tiling",
                  {{"non_positive", {cell.first, cell.second}}});
    }
  }
  return v;
}

}  // namespace

TilingWindow extend_frontier(const Frontier& F, int i0, int j0, int i1, int j1) {
  check_admissible(F);
  if (i0 > i1 || j0 > j1) throw Error(ErrorCode::kParse, "empty bounding box");
  const int margin = (i1 - i0) + (j1 - j0) + 4;
  const Box big{i0 - margin, j0 - margin, i1 + margin, j1 + margin};
  const auto all = propagate(F, big, false);
  TilingWindow W{i0, i1, j0, j1, false, {}};
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      auto it = all.find({i, j});
      if (it == all.end()) throw std::logic_error("frontier tiling left a cell undetermined");
      W.values[{i, j}] = it->second;
    }
  }
  return W;
}

std::map<Cell, BigInt> determined_region(const Frontier& F, int i0, int j0, int i1, int j1) {
  check_admissible(F);
  const int margin = (i1 - i0) + (j1 - j0) + 4;
  const auto all = propagate(F, Box{i0 - margin, j0 - margin, i1 + margin, j1 + margin}, true);
  std::map<Cell, BigInt> out;
  for (const auto& [c, v] : all) {
    if (c.first >= i0 && c.first <= i1 && c.second >= j0 && c.second <= j1) out.emplace(c, v);
  }
  return out;
}

Triangulation frontier_to_triangulation(const Frontier& F) {
  check_admissible(F);
  const long L = static_cast<long>(F.word.size());
  const long w0 = F.start.second - F.start.first;
  if (w0 + L < 2) {
    throw Error(ErrorCode::kNonAdmissibleFrontier, "frontier window does not meet the half plane",
                {{"non_admissible_frontier", F.word}});
  }
  // Every step widens by one, so exactly one point has width 2.
  const long a = 2 - w0;
  const Cell anchor = frontier_point(F, a);
  std::string word;
  for (long k = a; k <= std::max(a, L); ++k) word.push_back(frontier_step(F, k) == 'U' ? 'L' : 'R');
  return Triangulation::zigzag(anchor.first, word);
}

}  // namespace infcc
