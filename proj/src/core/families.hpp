#pragma once

#include <optional>
#include <string>

#include "core/arith.hpp"
#include "core/descriptor.hpp"

namespace syt {

struct FormulaMatch {
  std::string family;  // e.g. "rect-sq+1"
  std::string params;  // e.g. "m=1,n=1,k=2"
  bool conjecture = false;
  BigInt value;
};

// Closed form for a shape, if it belongs to a family with one. Includes the
// conjectured (n^n) \ (2) family, flagged via `conjecture`.
std::optional<FormulaMatch> match_formula(const ShapeDescriptor& shape);

enum class CountMethod { automatic, formula, oracle };

struct CountResult {
  BigInt value;
  std::string method;  // "oracle" or "formula:<family>"
  bool conjecture = false;
};

// automatic: proven closed form when one exists, otherwise the oracle.
// formula: any closed form (conjectures included) or NoFormulaAvailable.
CountResult count_shape(const ShapeDescriptor& shape, CountMethod method);

}  // namespace syt
