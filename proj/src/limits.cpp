#include "monoid/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "monoid/errors.hpp"

namespace monoid {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  const char* raw = std::getenv("MONOID_ORDERS_ENUM_BOUND");
  if (raw == nullptr || *raw == '\0') return limits;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw ParseError("MONOID_ORDERS_ENUM_BOUND must be a positive integer, got '" + std::string(raw) + "'");
  }
  limits.weyl_bound = value;
  limits.matrix_bound = value;
  return limits;
}

}  // namespace monoid
