#pragma once

#include <string>
#include <vector>

#include "monoid/limits.hpp"

namespace monoid {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every oracle cross-check the library knows about: published H-polynomial
/// coefficients, matrix enumeration against the rank strata, agreement of
/// the order formulas, Weyl group enumeration against product formulas, and
/// subspace counts against Gaussian binomials. Checks that would exceed the
/// limits are reported as failures naming the bound.
std::vector<CheckResult> run_verification(const EnumerationLimits& limits);

}  // namespace monoid
