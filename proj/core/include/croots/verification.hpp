#pragma once

#include <string>
#include <vector>

#include "croots/cluster.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

struct VerificationResult {
  bool ok = false;
  bool unavailable = false;  // coefficient recovery exceeded the precision budget
  std::string diagnostic;
};

/// Checks a cluster list against the degree: multiplicities must add up to d
/// and every disc with multiplicity > 1 must pass a Graeffe-Pellet recount on
/// coefficients recovered by evaluation-interpolation at d+1 roots of unity of
/// radius `scale` (a radius enclosing all roots).
VerificationResult verify_output(const OraclePair& o, const std::vector<Cluster>& clusters,
                                 long degree, const Real& scale, Telemetry* tel = nullptr);

/// Convenience overload deriving the interpolation radius from the largest
/// root radius bound.
VerificationResult verify_output(const OraclePair& o, const std::vector<Cluster>& clusters,
                                 long degree, Telemetry* tel = nullptr);

}  // namespace croots
