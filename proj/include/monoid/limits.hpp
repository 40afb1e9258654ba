#pragma once

#include <cstdint>

#include "monoid/oracle.hpp"
#include "monoid/weyl.hpp"

namespace monoid {

struct EnumerationLimits {
  std::uint64_t weyl_bound = kDefaultWeylBound;
  std::uint64_t matrix_bound = oracle::kDefaultMatrixBound;

  /// Defaults, with both bounds replaced by MONOID_ORDERS_ENUM_BOUND when it
  /// holds a positive integer. Throws ParseError on a malformed value.
  static EnumerationLimits from_environment();
};

}  // namespace monoid
