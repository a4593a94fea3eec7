#include "infcc/triangulation.hpp"

#include <algorithm>
#include <regex>

#include "infcc/error.hpp"
#include "infcc/serialize.hpp"

namespace infcc {

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case ClassKind::kLocallyFinite:
      return "LocallyFinite";
    case ClassKind::kFountain:
      return "Fountain(" + std::to_string(c.fountain) + ")";
    case ClassKind::kFinitePolygon:
      return "FinitePolygon";
  }
  return "?";
}

bool Quiver::has_loops() const {
  return std::any_of(arrows.begin(), arrows.end(), [](const auto& a) { return a.first == a.second; });
}

bool Quiver::has_two_cycles() const {
  std::set<std::pair<Arc, Arc>> seen(arrows.begin(), arrows.end());
  return std::any_of(arrows.begin(), arrows.end(),
                     [&](const auto& a) { return seen.count({a.second, a.first}) > 0; });
}

Triangulation Triangulation::fountain(int n) { return Triangulation{FountainBase{n}}; }

Triangulation Triangulation::nested_zigzag(int anchor) { return Triangulation{ZigzagBase{anchor, {}}}; }

Triangulation Triangulation::zigzag(int anchor, std::string word) {
  for (char c : word) {
    if (c != 'L' && c != 'R') {
      throw Error(ErrorCode::kParse, "zig-zag words use the letters L and R");
    }
  }
  // Drop trailing steps that the alternating continuation would produce anyway.
  while (!word.empty()) {
    const char implied = word.size() == 1 ? 'L' : (word[word.size() - 2] == 'L' ? 'R' : 'L');
    if (word.back() != implied) break;
    word.pop_back();
  }
  return Triangulation{ZigzagBase{anchor, std::move(word)}};
}

Triangulation Triangulation::polygon(int lo, int hi, std::set<Arc> diagonals) {
  if (hi - lo < 2) throw Error(ErrorCode::kParse, "polygon needs at least three vertices");
  return Triangulation{PolygonBase{lo, hi, std::move(diagonals)}};
}

Triangulation Triangulation::build(const TriangulationSpec& spec) {
  Triangulation t{spec.base};
  if (const auto* z = std::get_if<ZigzagBase>(&spec.base)) t = zigzag(z->anchor, z->word);
  for (const auto& f : spec.flips) {
    if (!t.contains(f)) {
      throw Error(ErrorCode::kFlipTargetNotMember, "flip target " + to_string(f) + " is not a member",
                  {{"flip_target_not_member", {f.m, f.n}}});
    }
    t = t.flipped(f);
  }
  return t;
}

Classification Triangulation::classify() const {
  if (const auto* f = std::get_if<FountainBase>(&base_)) return {ClassKind::kFountain, f->n};
  if (is_polygon()) return {ClassKind::kFinitePolygon, 0};
  return {ClassKind::kLocallyFinite, 0};
}

std::optional<int> Triangulation::fountain_vertex() const {
  if (const auto* f = std::get_if<FountainBase>(&base_)) return f->n;
  return std::nullopt;
}

Arc Triangulation::zigzag_arc(const ZigzagBase& z, int k) const {
  int m = z.anchor, n = z.anchor + 2;
  char prev = 'R';
  for (int i = 0; i < k; ++i) {
    char step;
    if (i < static_cast<int>(z.word.size())) {
      step = z.word[static_cast<std::size_t>(i)];
    } else {
      step = prev == 'L' ? 'R' : 'L';
    }
    if (step == 'L') {
      --m;
    } else {
      ++n;
    }
    prev = step;
  }
  return Arc{m, n};
}

bool Triangulation::base_contains(const Arc& a) const {
  return std::visit(
      [&](const auto& b) -> bool {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, FountainBase>) {
          return a.m == b.n || a.n == b.n;
        } else if constexpr (std::is_same_v<B, ZigzagBase>) {
          const int k = a.width() - 2;
          return zigzag_arc(b, k) == a;
        } else {
          return b.diagonals.count(a) > 0;
        }
      },
      base_);
}

bool Triangulation::contains(const Arc& a) const {
  if (added_.count(a)) return true;
  if (removed_.count(a)) return false;
  return base_contains(a);
}

std::vector<Arc> Triangulation::base_within(int lo, int hi) const {
  std::vector<Arc> out;
  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, FountainBase>) {
          if (b.n < lo || b.n > hi) return;
          for (int m = lo; m <= b.n - 2; ++m) out.emplace_back(m, b.n);
          for (int p = b.n + 2; p <= hi; ++p) out.emplace_back(b.n, p);
        } else if constexpr (std::is_same_v<B, ZigzagBase>) {
          // Zig-zag arcs are nested, so once one leaves the window all later ones do.
          for (int k = 0;; ++k) {
            const Arc a = zigzag_arc(b, k);
            if (a.m < lo || a.n > hi) break;
            out.push_back(a);
          }
        } else {
          for (const auto& d : b.diagonals) {
            if (d.m >= lo && d.n <= hi) out.push_back(d);
          }
        }
      },
      base_);
  return out;
}

std::vector<Arc> Triangulation::members_within(int lo, int hi) const {
  std::set<Arc> out;
  for (const auto& a : base_within(lo, hi)) {
    if (!removed_.count(a)) out.insert(a);
  }
  for (const auto& a : added_) {
    if (a.m >= lo && a.n <= hi) out.insert(a);
  }
  return {out.begin(), out.end()};
}

std::vector<Arc> Triangulation::members_meeting(int lo, int hi) const {
  auto meets = [&](const Arc& a) { return (a.m >= lo && a.m <= hi) || (a.n >= lo && a.n <= hi); };
  std::set<Arc> out;
  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, FountainBase>) {
          if (b.n >= lo && b.n <= hi) {
            throw Error(ErrorCode::kNotLocallyFinite, "window contains the fountain vertex",
                        {{"fountain", b.n}});
          }
          for (int v = lo; v <= hi; ++v) {
            if (v <= b.n - 2) out.insert(Arc{v, b.n});
            if (v >= b.n + 2) out.insert(Arc{b.n, v});
          }
        } else if constexpr (std::is_same_v<B, ZigzagBase>) {
          for (int k = 0;; ++k) {
            const Arc a = zigzag_arc(b, k);
            if (meets(a)) out.insert(a);
            if (a.m < lo && a.n > hi) break;
          }
        } else {
          for (const auto& a : b.diagonals) {
            if (meets(a)) out.insert(a);
          }
        }
      },
      base_);
  for (const auto& a : removed_) out.erase(a);
  for (const auto& a : added_) {
    if (meets(a)) out.insert(a);
  }
  return {out.begin(), out.end()};
}

bool Triangulation::connected(int x, int y) const {
  if (x > y) std::swap(x, y);
  if (y - x == 1) return true;
  if (y - x < 1) return false;
  if (const auto* p = std::get_if<PolygonBase>(&base_)) {
    if (x == p->lo && y == p->hi) return true;
  }
  return contains(Arc{x, y});
}

Side Triangulation::side_of(int x, int y) const {
  if (x > y) std::swap(x, y);
  if (y - x == 1) return Edge{x, y};
  if (const auto* p = std::get_if<PolygonBase>(&base_)) {
    if (x == p->lo && y == p->hi) return Edge{x, y};
  }
  return Arc{x, y};
}

std::optional<Arc> Triangulation::spanning_arc(const Arc& d) const {
  std::optional<Arc> best;
  auto consider = [&](const Arc& a) {
    if (spans(a, d) && contains(a) && (!best || a.width() < best->width())) best = a;
  };
  for (const auto& a : added_) consider(a);
  const int slack = static_cast<int>(removed_.size()) + 2;
  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, FountainBase>) {
          if (d.n <= b.n) {
            for (int m = std::min(d.m, b.n - 2); m >= d.m - slack; --m) consider(Arc{m, b.n});
          } else if (d.m >= b.n) {
            for (int p = std::max(d.n, b.n + 2); p <= d.n + slack; ++p) consider(Arc{b.n, p});
          }
        } else if constexpr (std::is_same_v<B, ZigzagBase>) {
          const int reach = static_cast<int>(b.word.size()) + 2 * (std::abs(b.anchor - d.m) + std::abs(d.n - b.anchor) + 2);
          int found = -1;
          for (int k = 0; k <= reach + 2 * slack; ++k) {
            const Arc a = zigzag_arc(b, k);
            if (spans(a, d) && found < 0) found = k;
            if (found >= 0) {
              consider(a);
              if (best && best->width() <= a.width()) break;
            }
          }
        } else {
          for (const auto& a : b.diagonals) consider(a);
        }
      },
      base_);
  return best;
}

PolygonModel Triangulation::polygon_model() const {
  const auto* p = std::get_if<PolygonBase>(&base_);
  if (!p) throw Error(ErrorCode::kNotAPolygon, "operation is defined on finite polygon models only");
  const auto members = members_within(p->lo, p->hi);
  return PolygonModel(p->lo, p->hi, {members.begin(), members.end()});
}

PolygonModel Triangulation::local_model(const Arc& d) const {
  if (const auto* p = std::get_if<PolygonBase>(&base_)) {
    PolygonModel model = polygon_model();
    if (!model.is_diagonal(d)) {
      throw Error(ErrorCode::kArcOutsideModel,
                  "arc " + to_string(d) + " is not a diagonal of the polygon " + std::to_string(p->lo) + ".." +
                      std::to_string(p->hi),
                  {{"outside_polygon", {p->lo, p->hi}}});
    }
    return model;
  }
  const auto t = spanning_arc(d);
  if (!t) {
    nlohmann::json detail = nlohmann::json::object();
    if (auto n = fountain_vertex()) detail = {{"unreachable", {{"fountain", *n}}}};
    throw Error(ErrorCode::kUnreachable, "arc " + to_string(d) + " is not spanned by any member", detail);
  }
  std::set<Arc> inside;
  for (const auto& a : members_within(t->m, t->n)) {
    if (a != *t) inside.insert(a);
  }
  return PolygonModel(t->m, t->n, std::move(inside), *t);
}

CrosserList Triangulation::crossers(const Arc& d) const {
  CrosserList out;
  if (auto n = fountain_vertex(); n && d.m < *n && *n < d.n) {
    out.infinite = true;
    return out;
  }
  if (const auto* p = std::get_if<PolygonBase>(&base_)) {
    for (const auto& a : members_within(p->lo, p->hi)) {
      if (crosses(a, d)) out.arcs.push_back(a);
    }
    order_along(d, out.arcs);
    return out;
  }
  out.arcs = local_model(d).crossers(d);
  return out;
}

FlipResult Triangulation::flip(const Arc& t) const {
  if (!contains(t)) {
    throw Error(ErrorCode::kNotAMember, "arc " + to_string(t) + " is not a member", {{"not_a_member", {t.m, t.n}}});
  }
  const PolygonModel model = local_model(t);
  const LocalFlip lf = model.flip(t);

  Triangulation next = *this;
  if (next.added_.erase(t) == 0) next.removed_.insert(t);
  if (next.removed_.erase(lf.replacement) == 0) next.added_.insert(lf.replacement);
  next.flips_.push_back(t);

  auto side = [&](const std::pair<int, int>& s) { return model.side_of(s.first, s.second); };
  return FlipResult{std::move(next),
                    t,
                    lf.replacement,
                    lf.quad,
                    {side(lf.middle_c[0]), side(lf.middle_c[1])},
                    {side(lf.middle_c_prime[0]), side(lf.middle_c_prime[1])}};
}

Triangulation Triangulation::flipped(const Arc& t) const { return flip(t).new_triangulation; }

std::pair<int, int> Triangulation::validation_box(int lo, int hi) const {
  int L = lo, H = hi;
  for (const auto* s : {&added_, &removed_}) {
    for (const auto& a : *s) {
      L = std::min(L, a.m);
      H = std::max(H, a.n);
    }
  }
  if (const auto* z = std::get_if<ZigzagBase>(&base_)) {
    for (int k = 0;; ++k) {
      const Arc a = zigzag_arc(*z, k);
      const bool meets = (a.m >= lo && a.m <= hi) || (a.n >= lo && a.n <= hi);
      if (meets) {
        L = std::min(L, a.m);
        H = std::max(H, a.n);
      }
      if (a.m < lo && a.n > hi) break;
    }
  }
  if (auto n = fountain_vertex()) {
    L = std::min(L, *n);
    H = std::max(H, *n);
  }
  const int pad = (hi - lo) + 2;
  return {L - pad, H + pad};
}

Diagnosis Triangulation::validate_window(int lo, int hi) const {
  Diagnosis diag;
  std::vector<Arc> members;
  int wlo = lo, whi = hi;
  if (const auto* p = std::get_if<PolygonBase>(&base_)) {
    const PolygonModel model(p->lo, p->hi, {});
    for (const auto& a : added_) {
      if (!model.is_diagonal(a)) diag.out_of_model.push_back(a);
    }
    for (const auto& a : p->diagonals) {
      if (!removed_.count(a) && !model.is_diagonal(a)) diag.out_of_model.push_back(a);
    }
    members = members_within(std::min(lo, p->lo), std::max(hi, p->hi));
    wlo = std::max(lo, p->lo);
    whi = std::min(hi, p->hi);
  } else {
    const auto [L, H] = validation_box(lo, hi);
    members = members_within(L, H);
  }
  auto meets = [&](const Arc& a) { return (a.m >= lo && a.m <= hi) || (a.n >= lo && a.n <= hi); };
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!meets(members[i])) continue;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (meets(members[j]) && crosses(members[i], members[j])) diag.crossing_pairs.emplace_back(members[i], members[j]);
    }
  }
  const auto* poly = std::get_if<PolygonBase>(&base_);
  for (int x = wlo; x <= whi; ++x) {
    for (int y = x + 2; y <= whi; ++y) {
      if (poly && x == poly->lo && y == poly->hi) continue;
      const Arc a{x, y};
      if (contains(a)) continue;
      const bool blocked = std::any_of(members.begin(), members.end(), [&](const Arc& u) { return crosses(u, a); });
      if (!blocked) diag.addable.push_back(a);
    }
  }
  return diag;
}

std::optional<std::array<int, 3>> Triangulation::shared_triangle(const Arc& a, const Arc& b) const {
  if (a == b) return std::nullopt;
  int shared, p, q;
  if (a.m == b.m) {
    shared = a.m, p = a.n, q = b.n;
  } else if (a.m == b.n) {
    shared = a.m, p = a.n, q = b.m;
  } else if (a.n == b.m) {
    shared = a.n, p = a.m, q = b.n;
  } else if (a.n == b.n) {
    shared = a.n, p = a.m, q = b.m;
  } else {
    return std::nullopt;
  }
  if (!connected(std::min(p, q), std::max(p, q))) return std::nullopt;
  std::array<int, 3> tri{shared, p, q};
  std::sort(tri.begin(), tri.end());
  return tri;
}

Quiver Triangulation::quiver(std::vector<Arc> vertices) const {
  Quiver q;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  q.vertices = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i == j) continue;
      const auto tri = shared_triangle(vertices[i], vertices[j]);
      if (tri && arrow_runs(vertices[i], vertices[j], (*tri)[0], (*tri)[1], (*tri)[2])) {
        q.arrows.emplace_back(vertices[i], vertices[j]);
      }
    }
  }
  return q;
}

Quiver Triangulation::quiver(int lo, int hi) const { return quiver(members_within(lo, hi)); }

namespace {

Arc parse_dotted_arc(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d+)[.,](-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorCode::kParse, "cannot parse arc '" + s + "'");
  return Arc{std::stoi(m[1]), std::stoi(m[2])};
}

}  // namespace

TriangulationSpec parse_triangulation_spec(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    return spec_from_json(nlohmann::json::parse(text));
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "fountain") return {FountainBase{std::stoi(rest)}, {}};
    if (kind == "zigzag") {
      const auto c2 = rest.find(':');
      ZigzagBase z{std::stoi(rest.substr(0, c2)), c2 == std::string::npos ? "" : rest.substr(c2 + 1)};
      return {z, {}};
    }
    if (kind == "polygon") {
      static const std::regex range(R"(^(-?\d+)-(-?\d+)(?::(.*))?$)");
      std::smatch m;
      if (!std::regex_match(rest, m, range)) throw Error(ErrorCode::kParse, "bad polygon spec '" + text + "'");
      PolygonBase p{std::stoi(m[1]), std::stoi(m[2]), {}};
      std::string diags = m[3].matched ? m[3].str() : "";
      std::size_t pos = 0;
      while (pos < diags.size()) {
        auto comma = diags.find(',', pos);
        if (comma == std::string::npos) comma = diags.size();
        const std::string item = diags.substr(pos, comma - pos);
        if (!item.empty()) p.diagonals.insert(parse_dotted_arc(item));
        pos = comma + 1;
      }
      return {p, {}};
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "cannot parse triangulation '" + text + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kParse, "cannot parse triangulation '" + text + "'");
  }
  throw Error(ErrorCode::kUnknownFamily, "unknown triangulation family '" + kind + "'",
              {{"unknown_family", kind}});
}

}  // namespace infcc
