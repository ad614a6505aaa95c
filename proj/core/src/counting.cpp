#include "croots/counting.hpp"

#include <stdexcept>

namespace croots {

namespace {
constexpr mpfr_prec_t kGeomPrec = 96;

// ceil(2*pi*w) for rational w > 0, decided with an interval for pi.
long ceil_two_pi(const mpq_class& w) {
  for (mpfr_prec_t wp = 128;; wp *= 2) {
    Real lo = Real::zero(wp), hi = Real::zero(wp);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    Real wq_lo = Real::from_rational(w, wp, MPFR_RNDD);
    Real wq_hi = Real::from_rational(w, wp, MPFR_RNDU);
    mpfr_mul(lo.raw(), lo.raw(), wq_lo.raw(), MPFR_RNDD);
    mpfr_mul(hi.raw(), hi.raw(), wq_hi.raw(), MPFR_RNDU);
    mpfr_mul_2si(lo.raw(), lo.raw(), 1, MPFR_RNDD);
    mpfr_mul_2si(hi.raw(), hi.raw(), 1, MPFR_RNDU);
    mpfr_ceil(lo.raw(), lo.raw());
    mpfr_ceil(hi.raw(), hi.raw());
    if (lo == hi) return lo.to_long_round();
  }
}
}  // namespace

mpq_class cover_inner_factor(const mpq_class& a, const mpq_class& theta) {
  if (!(a > 1)) throw std::invalid_argument("cover_inner_factor: a > 1 required");
  mpq_class t = mpq_class(5, 4) * theta;
  return ((1 - t) * a + (1 + t) / a) / 2;
}

mpq_class cover_outer_factor(const mpq_class& a, const mpq_class& theta) {
  if (!(a > 1)) throw std::invalid_argument("cover_outer_factor: a > 1 required");
  mpq_class t = mpq_class(5, 4) * theta;
  return ((1 + t) * a + (1 - t) / a) / 2;
}

AnnulusCover annulus_cover(const Point& c, const mpq_class& rho_minus,
                           const mpq_class& rho_plus) {
  if (!(rho_minus > 0 && rho_minus < rho_plus))
    throw std::invalid_argument("annulus_cover: 0 < rho- < rho+ required");
  mpq_class mu_q = (rho_plus + rho_minus) / 2;
  mpq_class rho_q = (rho_plus - rho_minus) / 2;
  mpq_class w_q = mu_q / rho_q;
  long v = ceil_two_pi(w_q);

  AnnulusCover cover;
  cover.v = v;
  cover.mu = Real::from_rational(mu_q, kGeomPrec, MPFR_RNDN);
  cover.rho = Real::from_rational(rho_q, kGeomPrec, MPFR_RNDN);
  cover.w = Real::from_rational(w_q, kGeomPrec, MPFR_RNDN);

  // Center roundoff budget: delta <= mu * 2^-(Lc-1); the disc radius grows by
  // the same amount so the ring still covers the annulus.
  const long lc = 48;
  Real mu_up = Real::from_rational(mu_q, kGeomPrec, MPFR_RNDU);
  Real slack = Real::zero(kGeomPrec);
  mpfr_mul_2si(slack.raw(), mu_up.raw(), -(lc - 1), MPFR_RNDU);
  Real radius = Real::from_rational(rho_q * mpq_class(5, 4), kGeomPrec, MPFR_RNDU);
  mpfr_add(radius.raw(), radius.raw(), slack.raw(), MPFR_RNDU);
  cover.disc_radius = radius;

  RealInterval mu_ball = ri_from_rational(mu_q, kGeomPrec);
  cover.centers.reserve(v);
  for (long j = 0; j < v; ++j) {
    ComplexInterval dir = root_of_unity(j, v, Precision(lc));
    ComplexInterval off = ci_scale_real(dir, mu_ball, kGeomPrec);
    Real cx = Real::zero(kGeomPrec), cy = Real::zero(kGeomPrec);
    mpfr_add(cx.raw(), c.re.raw(), off.re.center.raw(), MPFR_RNDN);
    mpfr_add(cy.raw(), c.im.raw(), off.im.center.raw(), MPFR_RNDN);
    cover.centers.emplace_back(std::move(cx), std::move(cy));
  }
  return cover;
}

bool unique_integer_in(const ComplexInterval& s, long* out) {
  if (!s.is_finite()) return false;
  if (!ri_contains(s.im, mpq_class(0))) return false;
  // width < 1 at success, so at most one integer fits; probe the nearest
  Real mid = s.re.center;
  long n = mid.to_long_round();
  if (!ri_contains(s.re, mpq_class(n))) return false;
  if (s.re.width_upper() >= Real(1L)) return false;
  if (out != nullptr) *out = n;
  return true;
}

int exclusion_test(const OraclePair& o, const Disc& disc, Telemetry* tel) {
  if (tel) tel->exclusion_tests += 1;
  PowerSumEstimate est =
      approximate_power_sums(o, disc, mpq_class(4, 3), 2, Real(1L), tel);
  if (!est.success) return -1;
  for (const auto& s : est.sums)
    if (!ci_contains_zero(s)) return -1;
  return 0;
}

int count_roots_isolated(const OraclePair& o, const Disc& disc, const mpq_class& theta,
                         Telemetry* tel) {
  PowerSumEstimate est = approximate_power_sums(o, disc, theta, 0, Real(1L), tel);
  if (!est.success) return -1;
  long m = -1;
  if (!unique_integer_in(est.sums[0], &m)) return -1;
  if (m < 0 || m > o.p.degree) return -1;
  return static_cast<int>(m);
}

int count_roots(const OraclePair& o, const Disc& disc, const mpq_class& a, Telemetry* tel) {
  if (!(a > 1)) throw std::invalid_argument("count_roots: a > 1 required");
  mpq_class r_q = disc.radius.to_rational();
  AnnulusCover cover = annulus_cover(disc.center, r_q / a, r_q * a);
  for (const Point& cj : cover.centers) {
    if (exclusion_test(o, Disc(cj, cover.disc_radius), tel) == -1) {
      return -1;  // a root lies in A(c, r f-(a,4/3), r f+(a,4/3))
    }
  }
  return count_roots_isolated(o, disc, a, tel);
}

}  // namespace croots
