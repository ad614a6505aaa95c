#pragma once

#include "croots/disc.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

/// Doubling loop from r = 1 until the verified counter reports all d roots in
/// D(0, r).  Throws NoConvergence past max_doublings (oracle inconsistency).
Real largest_root_radius_bound(const OraclePair& o, Telemetry* tel = nullptr,
                               long max_doublings = 1280);

/// Cover-ratio parameter a with nu^(-1/4) < f-(a, 4/3) < f+(a, 4/3) < 2;
/// a = 11/10 when nu = 2.  The inequalities are certified in rational
/// arithmetic.
mpq_class choose_cover_ratio(const mpq_class& nu);

struct RootRadiusInfo {
  long sieve_iterations = 0;
  mpq_class cover_ratio;
};

/// Approximates the smallest radius r_m(c, p) of a disc centered at the input
/// disc's center containing exactly m roots, within relative error nu.
/// Requires m >= 1, nu > 1 and 0 < eps <= r/2.
Real root_radius(const OraclePair& o, const Disc& disc, long m, const mpq_class& nu,
                 const Real& eps, Telemetry* tel = nullptr, RootRadiusInfo* info = nullptr);

}  // namespace croots
