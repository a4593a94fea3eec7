#include "infcc/polygon.hpp"

#include <algorithm>

#include "infcc/error.hpp"

namespace infcc {

PolygonModel::PolygonModel(int lo, int hi, std::set<Arc> diagonals, std::optional<Arc> closing_member)
    : lo_(lo), hi_(hi), diagonals_(std::move(diagonals)), closing_(closing_member) {
  if (hi - lo < 2) throw std::invalid_argument("polygon needs at least three vertices");
  if (closing_ && (closing_->m != lo || closing_->n != hi)) {
    throw std::invalid_argument("closing member must join lo and hi");
  }
}

bool PolygonModel::is_diagonal(int x, int y) const {
  if (x > y) std::swap(x, y);
  return contains_vertex(x) && contains_vertex(y) && y - x >= 2 && !(x == lo_ && y == hi_);
}

bool PolygonModel::is_side(int x, int y) const {
  if (x > y) std::swap(x, y);
  if (!contains_vertex(x) || !contains_vertex(y)) return false;
  return y - x == 1 || (x == lo_ && y == hi_);
}

bool PolygonModel::connected(int x, int y) const {
  if (x > y) std::swap(x, y);
  if (is_side(x, y)) return true;
  return y - x >= 2 && diagonals_.count(Arc{x, y}) > 0;
}

Side PolygonModel::side_of(int x, int y) const {
  if (x > y) std::swap(x, y);
  if (y - x == 1) return Edge{x, y};
  if (x == lo_ && y == hi_) {
    if (closing_) return *closing_;
    return Edge{x, y};
  }
  return Arc{x, y};
}

std::vector<Arc> PolygonModel::crossers(const Arc& d) const {
  std::vector<Arc> out;
  for (const auto& u : diagonals_) {
    if (crosses(u, d)) out.push_back(u);
  }
  order_along(d, out);
  return out;
}

std::optional<int> PolygonModel::apex(int x, int y, bool inside) const {
  if (x > y) std::swap(x, y);
  if (inside) {
    for (int c = x + 1; c < y; ++c) {
      if (connected(x, c) && connected(c, y)) return c;
    }
    return std::nullopt;
  }
  for (int c = lo_; c <= hi_; ++c) {
    if (c >= x && c <= y) continue;
    if (connected(std::min(c, x), std::max(c, x)) && connected(std::min(c, y), std::max(c, y))) {
      return c;
    }
  }
  return std::nullopt;
}

LocalFlip PolygonModel::flip(const Arc& t) const {
  if (!has(t)) {
    throw Error(ErrorCode::kNotAMember, "arc " + to_string(t) + " is not a diagonal of the triangulation");
  }
  const auto in = apex(t.m, t.n, true);
  const auto out = apex(t.m, t.n, false);
  if (!in || !out) {
    throw Error(ErrorCode::kUnboundedQuad, "arc " + to_string(t) + " does not bound two triangles");
  }
  std::array<int, 4> q{t.m, t.n, *in, *out};
  std::sort(q.begin(), q.end());

  LocalFlip f;
  f.replaced = t;
  f.quad = q;
  // Middle term c collects the sides leaving each endpoint of t towards the
  // next quad vertex in cyclic order; c' the sides arriving from the
  // previous one.
  if (t.m == q[0] && t.n == q[2]) {
    f.replacement = Arc{q[1], q[3]};
    f.middle_c = {{{q[0], q[1]}, {q[2], q[3]}}};
    f.middle_c_prime = {{{q[1], q[2]}, {q[0], q[3]}}};
  } else {
    f.replacement = Arc{q[0], q[2]};
    f.middle_c = {{{q[1], q[2]}, {q[0], q[3]}}};
    f.middle_c_prime = {{{q[0], q[1]}, {q[2], q[3]}}};
  }
  return f;
}

std::vector<std::array<int, 3>> PolygonModel::triangles() const {
  std::vector<std::array<int, 3>> out;
  for (int x = lo_; x <= hi_; ++x) {
    for (int y = x + 1; y <= hi_; ++y) {
      if (!connected(x, y)) continue;
      for (int z = y + 1; z <= hi_; ++z) {
        if (connected(y, z) && connected(x, z)) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

int PolygonModel::rotate_vertex(int v, int k) const {
  const int n = vertex_count();
  int r = (v - lo_ - k) % n;
  if (r < 0) r += n;
  return lo_ + r;
}

Arc PolygonModel::rotate(const Arc& a, int k) const {
  const int x = rotate_vertex(a.m, k);
  const int y = rotate_vertex(a.n, k);
  return Arc{std::min(x, y), std::max(x, y)};
}

std::vector<Arc> PolygonModel::all_diagonals() const {
  std::vector<Arc> out;
  for (int x = lo_; x <= hi_; ++x) {
    for (int y = x + 2; y <= hi_; ++y) {
      if (is_diagonal(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

bool PolygonModel::is_triangulation() const {
  for (const auto& d : diagonals_) {
    if (!is_diagonal(d)) return false;
  }
  for (auto i = diagonals_.begin(); i != diagonals_.end(); ++i) {
    for (auto j = std::next(i); j != diagonals_.end(); ++j) {
      if (crosses(*i, *j)) return false;
    }
  }
  return static_cast<int>(diagonals_.size()) == vertex_count() - 3;
}

}  // namespace infcc
