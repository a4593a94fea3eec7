#include "infcc/serialize.hpp"

#include <limits>

#include "infcc/error.hpp"

namespace infcc {

json to_json(const Arc& a) { return json::array({a.m, a.n}); }

Arc arc_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kParse, "arc must be [m, n]");
  return Arc{j[0].get<int>(), j[1].get<int>()};
}

json to_json(const Side& s) {
  if (const auto* a = std::get_if<Arc>(&s)) return to_json(*a);
  const auto& e = std::get<Edge>(s);
  return json{{"edge", {e.lo, e.hi}}};
}

Side side_from_json(const json& j) {
  if (j.is_object()) {
    const auto& e = j.at("edge");
    return Edge{e[0].get<int>(), e[1].get<int>()};
  }
  return arc_from_json(j);
}

json to_json(const TriangulationSpec& spec) {
  json base = std::visit(
      [](const auto& b) -> json {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, FountainBase>) {
          return {{"kind", "fountain"}, {"n", b.n}};
        } else if constexpr (std::is_same_v<B, ZigzagBase>) {
          json z{{"kind", "zigzag"}, {"anchor", b.anchor}};
          if (!b.word.empty()) z["word"] = b.word;
          return z;
        } else {
          json d = json::array();
          for (const auto& a : b.diagonals) d.push_back(to_json(a));
          return {{"kind", "polygon"}, {"lo", b.lo}, {"hi", b.hi}, {"diagonals", d}};
        }
      },
      spec.base);
  json flips = json::array();
  for (const auto& f : spec.flips) flips.push_back(to_json(f));
  return {{"base", base}, {"flips", flips}};
}

TriangulationSpec spec_from_json(const json& j) {
  try {
    TriangulationSpec spec;
    const auto& b = j.at("base");
    const auto kind = b.at("kind").get<std::string>();
    if (kind == "fountain") {
      spec.base = FountainBase{b.at("n").get<int>()};
    } else if (kind == "zigzag" || kind == "nested_zigzag") {
      spec.base = ZigzagBase{b.at("anchor").get<int>(), b.value("word", std::string{})};
    } else if (kind == "polygon") {
      PolygonBase p{b.at("lo").get<int>(), b.at("hi").get<int>(), {}};
      for (const auto& d : b.value("diagonals", json::array())) p.diagonals.insert(arc_from_json(d));
      spec.base = p;
    } else {
      throw Error(ErrorCode::kUnknownFamily, "unknown triangulation family '" + kind + "'",
                  {{"unknown_family", kind}});
    }
    if (j.contains("flips")) {
      for (const auto& f : j.at("flips")) spec.flips.push_back(arc_from_json(f));
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad triangulation JSON: ") + e.what());
  }
}

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long long>());
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (const auto& [a, e] : m.exponents()) exps.push_back(json::array({to_json(a), e}));
    out.push_back({{"coeff", to_json(c)}, {"exps", exps}});
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) {
    SplitK0Class alpha;
    for (const auto& e : t.at("exps")) alpha.add(arc_from_json(e[0]), e[1].get<int>());
    p += LaurentPoly::term(Monomial{alpha}, bigint_from_json(t.at("coeff")));
  }
  return p;
}

namespace {

template <class Tag>
json class_json(const ArcCombination<Tag>& k) {
  json out = json::array();
  for (const auto& [a, c] : k.coeffs()) out.push_back(json::array({to_json(a), c}));
  return out;
}

template <class Tag>
ArcCombination<Tag> class_from(const json& j) {
  ArcCombination<Tag> k;
  for (const auto& e : j) k.add(arc_from_json(e[0]), e[1].get<long long>());
  return k;
}

}  // namespace

json to_json(const SplitK0Class& k) { return class_json(k); }
json to_json(const ModClass& k) { return class_json(k); }
SplitK0Class split_class_from_json(const json& j) { return class_from<SplitTag>(j); }
ModClass mod_class_from_json(const json& j) { return class_from<ModTag>(j); }

}  // namespace infcc
