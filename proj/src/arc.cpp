#include "infcc/arc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

namespace infcc {

Arc::Arc(int m_, int n_) : m(m_), n(n_) {
  if (m > n - 2) {
    throw std::invalid_argument("arc (" + std::to_string(m_) + "," + std::to_string(n_) +
                                ") does not connect non-neighbouring integers");
  }
}

bool is_arc(const Side& s) { return std::holds_alternative<Arc>(s); }

std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

std::string to_string(const Side& s) {
  if (const auto* a = std::get_if<Arc>(&s)) return to_string(*a);
  const auto& e = std::get<Edge>(s);
  return "edge(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")";
}

bool crosses(const Arc& a, const Arc& b) {
  return (a.m < b.m && b.m < a.n && a.n < b.n) || (b.m < a.m && a.m < b.n && b.n < a.n);
}

bool spans(const Arc& outer, const Arc& inner) {
  const int s = outer.m, t = outer.n, u = inner.m, v = inner.n;
  return (s <= u && u < v && v < t) || (s < u && u < v && v <= t);
}

Arc shift(const Arc& a, int k) { return Arc{a.m - k, a.n - k}; }

bool hom_nonzero(const Arc& a, const Arc& b) { return crosses(a, shift(b, -1)); }

namespace {

// Position of a crossing arc along `d`: its endpoint strictly inside d first,
// then its outer endpoint by cyclic distance from d's left endpoint.
std::tuple<int, int, int> along_key(const Arc& d, const Arc& u) {
  const bool m_inside = d.m < u.m && u.m < d.n;
  const int inner = m_inside ? u.m : u.n;
  const int outer = m_inside ? u.n : u.m;
  if (outer < d.m) return {inner, 0, d.m - outer};
  return {inner, 1, -outer};
}

}  // namespace

void order_along(const Arc& along, std::vector<Arc>& crossing) {
  std::sort(crossing.begin(), crossing.end(), [&](const Arc& a, const Arc& b) {
    return along_key(along, a) < along_key(along, b);
  });
}

bool arrow_runs(const Arc& a, const Arc& b, int x, int y, int z) {
  const std::array<std::pair<int, int>, 3> cyc{{{x, y}, {x, z}, {y, z}}};
  for (std::size_t i = 0; i < 3; ++i) {
    if (cyc[i] == std::pair{a.m, a.n}) {
      const auto& next = cyc[(i + 1) % 3];
      return next == std::pair{b.m, b.n};
    }
  }
  return false;
}

}  // namespace infcc
