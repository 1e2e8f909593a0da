#pragma once

#include <json.hpp>

#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/hvec.hpp"
#include "hilbert/value.hpp"

// JSON forms:
//   scalar    [re, im]
//   vector    {"dim": n, "coeffs": [[re, im], ...]}
//   operator  {"rows": m, "cols": n, "entries": [[re, im], ...]}   row-major
//   subspace  {"ambient": n, "basis": [vector, ...]}                 validated on load
//   partial map {"dom": n, "cod": m, "map": [null | index, ...]}
//   value     {"sort": "scalar" | "vector" | "operator" | "subspace" | "bool", "value": ...}
//
// Readers throw InvalidValue (or the payload's own validation error) on
// malformed input.
namespace hilbert::json_io {

using nlohmann::json;

json to_json(CScalar z);
json to_json(const HVec& x);
json to_json(const HOp& a);
json to_json(const Subspace& s);
json to_json(const PartialMap& pi);
json value_to_json(const Value& v);

CScalar scalar_from_json(const json& j);
HVec vector_from_json(const json& j);
HOp operator_from_json(const json& j);
Subspace subspace_from_json(const json& j, const Tolerance& tol = {});
PartialMap partial_map_from_json(const json& j);
Value value_from_json(const json& j, const Tolerance& tol = {});

}  // namespace hilbert::json_io
