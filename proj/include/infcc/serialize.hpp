#pragma once

#include "json.hpp"

#include "infcc/arc.hpp"
#include "infcc/laurent.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

using nlohmann::json;

json to_json(const Arc& a);
Arc arc_from_json(const json& j);

/// Arcs as [m,n], edges as {"edge":[lo,hi]}.
json to_json(const Side& s);
Side side_from_json(const json& j);

json to_json(const TriangulationSpec& spec);
TriangulationSpec spec_from_json(const json& j);

/// [{"coeff": c, "exps": [[[m,n],e], ...]}, ...]; coefficients outside the
/// int64 range are written as decimal strings.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// [[[m,n], coefficient], ...]
json to_json(const SplitK0Class& k);
json to_json(const ModClass& k);
SplitK0Class split_class_from_json(const json& j);
ModClass mod_class_from_json(const json& j);

/// Decimal string or JSON integer, whichever fits.
json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

}  // namespace infcc
