#pragma once

#include <optional>

#include "croots/disc.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

/// Radius u = max(|c - c'| + r/theta, r) of the recentered disc D(c', u);
/// for c' in D(c, (r + eps)/theta) the chain D(c, r/theta) <= D(c', u)
/// <= D(c, (7/4) r) holds.
Real recentered_radius(const Point& c, const Real& r, const mpq_class& theta, const Point& c2);

struct CompressionResult {
  long m = -1;                // -1 on failure
  std::optional<Disc> disc;   // present whenever a disc was produced
};

/// eps-compression into a rigid disc (gamma = 1/8): shrinks a 2-isolated,
/// nonempty disc onto its root cluster.  Returns the root count and the
/// compressed disc; m = -1 with no disc signals failure (data, not an error).
CompressionResult compress(const OraclePair& o, const Disc& disc, const Real& eps,
                           Telemetry* tel = nullptr);

}  // namespace croots
