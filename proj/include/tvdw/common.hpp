#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace tvdw {

// Invalid argument for the requested operation (bad parameter ranges,
// points outside the space, theorem hypotheses not met).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The request is valid but cannot be served at the materialized scale
// (hierarchy too shallow, tolerance unreachable, carrier too large).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A witness search came up empty at the working resolution.
struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace tvdw
