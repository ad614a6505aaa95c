#include "croots/compression.hpp"

#include <algorithm>
#include <stdexcept>

#include "croots/cauchy.hpp"
#include "croots/counting.hpp"
#include "croots/radii.hpp"

namespace croots {

namespace {
constexpr mpfr_prec_t kGeomPrec = 96;
}

Real recentered_radius(const Point& c, const Real& r, const mpq_class& theta, const Point& c2) {
  if (!(theta >= 2)) throw std::invalid_argument("recentered_radius: theta >= 2 required");
  Real shift = dist_upper(c, c2);
  Real inner = Real::from_rational(r.to_rational() / theta, kGeomPrec, MPFR_RNDU);
  Real u = Real::zero(kGeomPrec);
  mpfr_add(u.raw(), shift.raw(), inner.raw(), MPFR_RNDU);
  if (u < r) u = r;
  return u;
}

CompressionResult compress(const OraclePair& o, const Disc& disc, const Real& eps,
                           Telemetry* tel) {
  if (eps.sign() <= 0) throw std::invalid_argument("compress: eps > 0 required");
  const mpq_class theta(2);

  Real eps_quarter = eps;  // eps' = eps / (2 theta) = eps / 4
  mpfr_mul_2si(eps_quarter.raw(), eps_quarter.raw(), -2, MPFR_RNDN);
  Real e = eps_quarter < Real(1L) ? eps_quarter : Real(1L);

  PowerSumEstimate est = approximate_power_sums(o, disc, theta, 1, e, tel);
  long m = -1;
  if (!est.success || !unique_integer_in(est.sums[0], &m) || m <= 0) return {};

  // r/2 < eps: the disc is already small enough
  Real half_r = disc.radius;
  mpfr_mul_2si(half_r.raw(), half_r.raw(), -1, MPFR_RNDN);
  if (half_r < eps) return {m, Disc(disc.center, half_r)};

  // recenter on the cluster's center of gravity:
  // s_1(p, c, r) = c m + r s_1(p_Delta), so c' = c + r mid(s_1) / m
  long mag = 1;
  for (const Real* x : {&disc.center.re, &disc.center.im, &disc.radius})
    if (!x->is_zero() && x->is_finite()) mag = std::max<long>(mag, mpfr_get_exp(x->raw()));
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(
      std::max<long>(kGeomPrec, mag - mpfr_get_exp(eps.raw()) + 64));
  Real cx = Real::zero(wp), cy = Real::zero(wp);
  mpfr_mul(cx.raw(), disc.radius.raw(), est.sums[1].re.center.raw(), MPFR_RNDN);
  mpfr_div_si(cx.raw(), cx.raw(), m, MPFR_RNDN);
  mpfr_add(cx.raw(), cx.raw(), disc.center.re.raw(), MPFR_RNDN);
  mpfr_mul(cy.raw(), disc.radius.raw(), est.sums[1].im.center.raw(), MPFR_RNDN);
  mpfr_div_si(cy.raw(), cy.raw(), m, MPFR_RNDN);
  mpfr_add(cy.raw(), cy.raw(), disc.center.im.raw(), MPFR_RNDN);
  Point recentered(std::move(cx), std::move(cy));

  if (m == 1) {
    Real rad = eps_quarter;
    mpfr_mul_2si(rad.raw(), rad.raw(), 1, MPFR_RNDN);  // 2 eps' = eps/2
    Disc out(recentered, rad);
    int m2 = count_roots_isolated(o, out, theta, tel);
    return {m2, out};
  }

  Real u = recentered_radius(disc.center, disc.radius, theta, recentered);
  Real half_eps = eps;
  mpfr_mul_2si(half_eps.raw(), half_eps.raw(), -1, MPFR_RNDN);
  Real r2 = root_radius(o, Disc(recentered, u), m, theta, half_eps, tel);
  return {m, Disc(recentered, r2)};
}

}  // namespace croots
