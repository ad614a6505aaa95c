#pragma once

#include <vector>

#include "croots/disc.hpp"
#include "croots/interval.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

/// Certified boundary bounds for a theta-isolated disc of the given radius:
/// |p| >= p_lower and |p'/p| <= ratio_upper on the boundary circle.
struct EvalBounds {
  Real p_lower;      // rounded down
  Real ratio_upper;  // rounded up
};

EvalBounds eval_bounds(long degree, const Real& radius, const mpq_class& theta,
                       const Real& lc_lower);

/// Oracle precision that makes the interval Cauchy sum radius <= e.
Precision prec_bound(long degree, const Real& radius, const Real& e, const mpq_class& theta);

/// Evaluation-count estimate, reporting/telemetry only.
double cost_bound(long degree, const Real& radius, const Real& e, const mpq_class& theta);
double cost_bound(long degree, const Real& radius);  // e = 1/4, theta = 2

/// Number of sample points q for target error e at order h.
long cauchy_sum_points(long degree, const Real& e, const mpq_class& theta, long h);

/// Interval Cauchy sum (r/q) * sum_g zeta^{g(h+1)} P'(c+r zeta^g)(L) / P(...)(L).
/// Contains the exact Cauchy sum of order h over the disc boundary.  Throws
/// DivisorContainsZero when some P enclosure contains zero at this precision.
ComplexInterval cauchy_sum_enclosure(const OraclePair& o, const Disc& disc, long q, long h,
                                     Precision L, Telemetry* tel = nullptr);

/// Output of the power-sum approximation loop.  On success every enclosure
/// has width < e and, for a disc whose boundary annulus is root free, contains
/// the power sum of p_Delta over the unit disc.
struct PowerSumEstimate {
  bool success = false;
  std::vector<ComplexInterval> sums;
  long final_precision_bits = 0;
  long rounds = 0;
};

/// Power sums s_0..s_h of p_Delta(z) = p(c + r z) over the unit disc,
/// approximated through Cauchy sums with the doubling precision loop.
/// Failure (success = false) certifies a root in A(c, r/theta, r*theta) and in
/// D(c, r*theta); it is data, not an error.
PowerSumEstimate approximate_power_sums(const OraclePair& o, const Disc& disc,
                                        const mpq_class& theta, long h, const Real& e,
                                        Telemetry* tel = nullptr);

}  // namespace croots
