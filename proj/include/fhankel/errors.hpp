#pragma once

#include <stdexcept>
#include <string>

namespace fhankel {

// Precision escalation exhausted or a matrix too ill-conditioned to trust.
struct ConditioningError : std::runtime_error {
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature failed to stabilize under node doubling.
struct QuadratureError : std::runtime_error {
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fhankel
