#pragma once

#include <stdexcept>
#include <string>

namespace croots {

/// Thrown by interval division when the divisor enclosure contains zero.
/// Callers respond by raising the query precision or treating the point as
/// too close to a root.
struct DivisorContainsZero : std::domain_error {
  DivisorContainsZero() : std::domain_error("interval divisor contains zero") {}
};

struct ZeroLeadingCoefficient : std::invalid_argument {
  ZeroLeadingCoefficient() : std::invalid_argument("leading coefficient is zero") {}
};

/// Signals an oracle inconsistency: an iteration that must converge under
/// correct counts exceeded its cap.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace croots
