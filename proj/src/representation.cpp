#include "infcc/representation.hpp"

#include <functional>
#include <stdexcept>
#include <tuple>

namespace infcc {

namespace gf {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

// Row reduction in place; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const std::uint64_t s = inv(rows[r][c]);
    for (auto& x : rows[r]) x = x * s % kPrime;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = (rows[i][j] + kPrime - f * rows[r][j] % kPrime) % kPrime;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

int rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(reduce(rows, rows.front().size()).size());
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t cols) {
  std::vector<Vec> m = rows;
  const auto pivots = reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (kPrime - m[i][free]) % kPrime;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gf

BoundQuiver BoundQuiver::from_polygon(const PolygonModel& model) {
  BoundQuiver q;
  for (const auto& d : model.diagonals()) {
    q.index_[d] = static_cast<int>(q.vertices_.size());
    q.vertices_.push_back(d);
  }
  const auto tris = model.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const auto [x, y, z] = tris[t];
    std::vector<Arc> sides;
    for (auto [a, b] : {std::pair{x, y}, {x, z}, {y, z}}) {
      if (b - a >= 2 && model.has(Arc{a, b})) sides.emplace_back(a, b);
    }
    for (const auto& a : sides) {
      for (const auto& b : sides) {
        if (a != b && arrow_runs(a, b, x, y, z)) {
          q.arrows_.push_back({q.index_.at(a), q.index_.at(b), static_cast<int>(t)});
        }
      }
    }
  }
  return q;
}

BoundQuiver BoundQuiver::opposite() const {
  BoundQuiver q = *this;
  for (auto& a : q.arrows_) std::swap(a.src, a.dst);
  return q;
}

int BoundQuiver::index_of(const Arc& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw std::out_of_range("not a vertex: " + to_string(a));
  return it->second;
}

std::vector<std::vector<int>> BoundQuiver::paths(int from, int to) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const std::size_t cap = vertices_.size() + 1;
  std::function<void(int)> walk = [&](int v) {
    if (v == to) out.push_back(cur);
    if (cur.size() > cap) throw std::logic_error("unbounded path in polygon quiver");
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      const auto& a = arrows_[i];
      if (a.src != v) continue;
      if (!cur.empty() && arrows_[static_cast<std::size_t>(cur.back())].triangle == a.triangle) continue;
      cur.push_back(static_cast<int>(i));
      walk(a.dst);
      cur.pop_back();
    }
  };
  walk(from);
  return out;
}

namespace {

// Basis element of P_0 at some vertex: (summand generator vertex, path).
struct PathElem {
  int top;
  std::vector<int> path;
  bool operator<(const PathElem& o) const { return std::tie(top, path) < std::tie(o.top, o.path); }
};

}  // namespace

Presentation minimal_presentation(const BoundQuiver& Q, const std::set<Arc>& support) {
  const int nv = static_cast<int>(Q.vertices().size());
  std::vector<bool> in(static_cast<std::size_t>(nv), false);
  for (const auto& a : support) in[static_cast<std::size_t>(Q.index_of(a))] = true;
  const auto& arrows = Q.arrows();

  // Top: support vertices not hit by any structure map.
  std::vector<int> tops;
  for (int v = 0; v < nv; ++v) {
    if (!in[static_cast<std::size_t>(v)]) continue;
    bool radical = false;
    for (const auto& a : arrows) {
      if (a.src == v && in[static_cast<std::size_t>(a.dst)]) radical = true;
    }
    if (!radical) tops.push_back(v);
  }

  Presentation pres;
  for (int v : tops) pres.p0.add(Q.vertices()[static_cast<std::size_t>(v)], 1);

  // P_0(w) basis, and the map to M(w).
  std::vector<std::vector<PathElem>> basis(static_cast<std::size_t>(nv));
  std::vector<std::map<PathElem, std::size_t>> pos(static_cast<std::size_t>(nv));
  for (int w = 0; w < nv; ++w) {
    for (int v : tops) {
      for (auto& p : Q.paths(w, v)) {
        PathElem e{v, std::move(p)};
        pos[static_cast<std::size_t>(w)][e] = basis[static_cast<std::size_t>(w)].size();
        basis[static_cast<std::size_t>(w)].push_back(std::move(e));
      }
    }
  }

  auto path_in_support = [&](int w, const std::vector<int>& p) {
    if (!in[static_cast<std::size_t>(w)]) return false;
    for (int i : p) {
      if (!in[static_cast<std::size_t>(arrows[static_cast<std::size_t>(i)].dst)]) return false;
    }
    return true;
  };

  // Kernel of P_0(w) -> M(w).
  std::vector<std::vector<gf::Vec>> omega(static_cast<std::size_t>(nv));
  for (int w = 0; w < nv; ++w) {
    const auto& B = basis[static_cast<std::size_t>(w)];
    if (B.empty()) continue;
    gf::Vec row(B.size(), 0);
    for (std::size_t i = 0; i < B.size(); ++i) row[i] = path_in_support(w, B[i].path) ? 1 : 0;
    omega[static_cast<std::size_t>(w)] = gf::kernel({row}, B.size());
  }

  // P_1 multiplicity at w: dim Omega(w) minus the radical coming in along arrows w -> b.
  for (int w = 0; w < nv; ++w) {
    const auto& Ow = omega[static_cast<std::size_t>(w)];
    if (Ow.empty()) continue;
    const auto& Bw = basis[static_cast<std::size_t>(w)];
    std::vector<gf::Vec> rad;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
      const auto& a = arrows[ai];
      if (a.src != w) continue;
      const auto& Bb = basis[static_cast<std::size_t>(a.dst)];
      for (const auto& k : omega[static_cast<std::size_t>(a.dst)]) {
        gf::Vec img(Bw.size(), 0);
        for (std::size_t i = 0; i < Bb.size(); ++i) {
          if (k[i] == 0) continue;
          const auto& p = Bb[i].path;
          if (!p.empty() && arrows[static_cast<std::size_t>(p.front())].triangle == a.triangle) continue;
          PathElem e{Bb[i].top, {}};
          e.path.push_back(static_cast<int>(ai));
          e.path.insert(e.path.end(), p.begin(), p.end());
          const auto it = pos[static_cast<std::size_t>(w)].find(e);
          if (it == pos[static_cast<std::size_t>(w)].end()) throw std::logic_error("path basis not closed");
          img[it->second] = (img[it->second] + k[i]) % gf::kPrime;
        }
        rad.push_back(std::move(img));
      }
    }
    const int top = static_cast<int>(Ow.size()) - gf::rank(std::move(rad));
    pres.p1.add(Q.vertices()[static_cast<std::size_t>(w)], top);
  }
  return pres;
}

}  // namespace infcc
