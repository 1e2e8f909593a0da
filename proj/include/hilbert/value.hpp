#pragma once

#include <string>
#include <variant>

#include "hilbert/hop.hpp"
#include "hilbert/hsub.hpp"
#include "hilbert/hvec.hpp"
#include "hilbert/numeric.hpp"

namespace hilbert {

// Runtime value flowing through the expression evaluator.
using Value = std::variant<CScalar, HVec, HOp, Subspace, bool>;

enum class Sort { Scalar, Vector, Operator, Space, Bool };

Sort sort_of(const Value& v);
const char* sort_name(Sort s);

}  // namespace hilbert
