#pragma once

#include <vector>

#include "croots/cauchy.hpp"
#include "croots/disc.hpp"
#include "croots/oracle.hpp"
#include "croots/telemetry.hpp"

namespace croots {

/// f-(a, theta) and f+(a, theta): the annulus A(c, r f-, r f+) covers the
/// theta-inflation of the ring of cover discs built for A(c, r/a, r a).
mpq_class cover_inner_factor(const mpq_class& a, const mpq_class& theta);
mpq_class cover_outer_factor(const mpq_class& a, const mpq_class& theta);

/// Ring of discs covering the annulus A(c, rho-, rho+).  Centers carry a tiny
/// dyadic rounding which the disc radius absorbs, so the union still covers.
struct AnnulusCover {
  std::vector<Point> centers;
  Real disc_radius;  // (5/4) rho, inflated by the center rounding slack
  long v = 0;
  Real mu, rho, w;
};

AnnulusCover annulus_cover(const Point& c, const mpq_class& rho_minus,
                           const mpq_class& rho_plus);

/// Cauchy exclusion test: 0 certifies (heuristically) that the disc holds no
/// root; -1 is "undecided", and guarantees a root in (4/3) Delta when caused
/// by a nonzero power sum.
int exclusion_test(const OraclePair& o, const Disc& disc, Telemetry* tel = nullptr);

/// Root counter assuming the disc is theta-isolated: the number of roots in
/// the disc, or -1.
int count_roots_isolated(const OraclePair& o, const Disc& disc, const mpq_class& theta,
                         Telemetry* tel = nullptr);

/// Root counter with heuristic isolation verification: runs the exclusion
/// test on an annulus cover before counting.  -1 certifies a root in
/// A(c, r f-(a,4/3), r f+(a,4/3)).
int count_roots(const OraclePair& o, const Disc& disc, const mpq_class& a,
                Telemetry* tel = nullptr);

/// Index of the unique integer contained in the enclosure, or LONG_MIN-like
/// sentinel; helper shared by the counters (exposed for tests).
bool unique_integer_in(const ComplexInterval& s, long* out);

}  // namespace croots
