#pragma once

#include <string>

#include "json.hpp"

#include "hullcodes/code.hpp"
#include "hullcodes/conditions.hpp"
#include "hullcodes/constructions.hpp"

namespace hc {

using nlohmann::json;

json field_json(const FieldCtx& ctx);
FieldPtr field_from_json(const json& j);

/// {alphabet: {p, m, poly, s}, n, k, generator}
json code_json(const LinearCode& c);
LinearCode code_from_json(const json& j);

/// [{w, count}]
json weights_json(const WeightDistribution& w);
/// [{composition, count}]
json cwe_json(const CompleteWeightEnumerator& cwe);

/// {field, base_degree, elements: [[coeffs]], provenance}
json defining_set_json(const DefiningSet& d);
/// Parses the above; `field` may be omitted when ctx is given.
DefiningSet defining_set_from_json(const json& j, FieldPtr ctx = nullptr);

/// {variant, holds, lhs, rhs, imaginary_zero}
json verdict_json(const MembershipVerdict& v);

std::string weights_csv(const WeightDistribution& w);
std::string cwe_csv(const CompleteWeightEnumerator& cwe);

}  // namespace hc
