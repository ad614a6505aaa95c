#include "croots/cauchy.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace croots {

namespace {

constexpr mpfr_prec_t kBoundPrec = 64;

Real real_from_q(const mpq_class& q, mpfr_rnd_t rnd) {
  return Real::from_rational(q, kBoundPrec, rnd);
}

ComplexInterval inflate(const ComplexInterval& v, const Real& e_axis) {
  ComplexInterval out = v;
  mpfr_add(out.re.radius.raw(), out.re.radius.raw(), e_axis.raw(), MPFR_RNDU);
  mpfr_add(out.im.radius.raw(), out.im.radius.raw(), e_axis.raw(), MPFR_RNDU);
  return out;
}

}  // namespace

EvalBounds eval_bounds(long degree, const Real& radius, const mpq_class& theta,
                       const Real& lc_lower) {
  if (!(theta > 1)) throw std::invalid_argument("eval_bounds: theta > 1 required");
  if (radius.sign() <= 0) throw std::invalid_argument("eval_bounds: radius > 0 required");
  mpq_class ratio = (theta - 1) / theta;  // (theta-1)/theta, exact

  Real base = Real::zero(kBoundPrec);
  mpfr_mul(base.raw(), radius.raw(), real_from_q(ratio, MPFR_RNDD).raw(), MPFR_RNDD);
  Real ell = Real::zero(kBoundPrec);
  mpfr_pow_si(ell.raw(), base.raw(), degree, MPFR_RNDD);
  mpfr_mul(ell.raw(), ell.raw(), lc_lower.raw(), MPFR_RNDD);
  if (ell.sign() < 0) mpfr_set_zero(ell.raw(), 1);

  // ell' = d * theta / (r * (theta - 1))
  Real ellp = real_from_q(theta / (theta - 1), MPFR_RNDU);
  mpfr_mul_si(ellp.raw(), ellp.raw(), degree, MPFR_RNDU);
  mpfr_div(ellp.raw(), ellp.raw(), radius.raw(), MPFR_RNDU);
  return {std::move(ell), std::move(ellp)};
}

Precision prec_bound(long degree, const Real& radius, const Real& e, const mpq_class& theta) {
  if (degree < 1) throw std::invalid_argument("prec_bound: degree >= 1 required");
  // (d+1) * log2(theta / (e r (theta-1))) + log2(26 r d), rounded up
  Real arg = Real::zero(kBoundPrec);
  mpfr_mul(arg.raw(), e.raw(), radius.raw(), MPFR_RNDD);
  Real tq = real_from_q(theta / (theta - 1), MPFR_RNDU);
  mpfr_div(arg.raw(), tq.raw(), arg.raw(), MPFR_RNDU);
  Real t1 = Real::zero(kBoundPrec);
  mpfr_log2(t1.raw(), arg.raw(), MPFR_RNDU);
  mpfr_mul_si(t1.raw(), t1.raw(), degree + 1, MPFR_RNDU);

  Real arg2 = Real::zero(kBoundPrec);
  mpfr_mul_si(arg2.raw(), radius.raw(), 26 * degree, MPFR_RNDU);
  Real t2 = Real::zero(kBoundPrec);
  mpfr_log2(t2.raw(), arg2.raw(), MPFR_RNDU);

  mpfr_add(t1.raw(), t1.raw(), t2.raw(), MPFR_RNDU);
  mpfr_ceil(t1.raw(), t1.raw());
  long bits = t1.to_long_round();
  return Precision(bits < 1 ? 1 : bits);
}

double cost_bound(long degree, const Real& radius, const Real& e, const mpq_class& theta) {
  double prec = static_cast<double>(prec_bound(degree, radius, e, theta).bits());
  double de = degree / e.to_double();
  if (!(de > 1)) throw std::invalid_argument("cost_bound: d/e > 1 required");
  double logtheta = std::log2(mpq_class(theta).get_d());
  return std::log2(prec) * std::log2(de) / logtheta;
}

double cost_bound(long degree, const Real& radius) {
  return cost_bound(degree, radius, Real(0.25, 16), mpq_class(2));
}

long cauchy_sum_points(long degree, const Real& e, const mpq_class& theta, long h) {
  // q = ceil(log_theta(4 d / e)) + h + 1
  Real arg = Real::zero(kBoundPrec);
  mpfr_si_div(arg.raw(), 4 * degree, e.raw(), MPFR_RNDU);
  Real num = Real::zero(kBoundPrec), den = Real::zero(kBoundPrec);
  mpfr_log2(num.raw(), arg.raw(), MPFR_RNDU);
  Real th = real_from_q(theta, MPFR_RNDD);
  mpfr_log2(den.raw(), th.raw(), MPFR_RNDD);
  Real q = Real::zero(kBoundPrec);
  mpfr_div(q.raw(), num.raw(), den.raw(), MPFR_RNDU);
  mpfr_ceil(q.raw(), q.raw());
  long qq = q.to_long_round();
  if (qq < 0) qq = 0;
  return qq + h + 1;
}

ComplexInterval cauchy_sum_enclosure(const OraclePair& o, const Disc& disc, long q, long h,
                                     Precision L, Telemetry* tel) {
  if (h < 0 || h >= q) throw std::invalid_argument("cauchy_sum_enclosure: 0 <= h < q required");
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(L.bits() + 64);
  auto zetas = roots_of_unity_table(q, L.bits() + 16);
  ComplexInterval acc = ComplexInterval::exact(Real(0L), Real(0L));
  for (long g = 0; g < q; ++g) {
    auto [pv, dpv] = o.both(circle_point(disc.center, disc.radius, g, q), L);
    if (tel) tel->oracle_evaluations += 2;
    ComplexInterval ratio = ci_div(dpv, pv, wp);
    acc = ci_add(acc, ci_mul((*zetas)[(g * (h + 1)) % q], ratio, wp), wp);
  }
  RealInterval scale =
      ri_div(RealInterval(disc.radius), RealInterval(Real(q, kBoundPrec)), wp);
  return ci_scale_real(acc, scale, wp);
}

PowerSumEstimate approximate_power_sums(const OraclePair& o, const Disc& disc,
                                        const mpq_class& theta, long h, const Real& e,
                                        Telemetry* tel) {
  if (!(theta > 1)) throw std::invalid_argument("approximate_power_sums: theta > 1");
  if (h < 0) throw std::invalid_argument("approximate_power_sums: h >= 0");
  if (e.sign() <= 0) throw std::invalid_argument("approximate_power_sums: e > 0");
  const long d = o.p.degree;
  if (d < 1) throw std::invalid_argument("approximate_power_sums: degree >= 1");
  if (tel) tel->power_sum_calls += 1;

  PowerSumEstimate est;
  est.sums.assign(h + 1, ComplexInterval::whole());

  Real e_quarter = e;  // e' = e/4
  mpfr_mul_2si(e_quarter.raw(), e_quarter.raw(), -2, MPFR_RNDN);
  const long q = cauchy_sum_points(d, e, theta, h);
  Real lc_lower = ri_abs_lower(o.p.leading_coeff_modulus);
  EvalBounds eb = eval_bounds(d, disc.radius, theta, lc_lower);
  Real ell_half = eb.p_lower;
  mpfr_mul_2si(ell_half.raw(), ell_half.raw(), -1, MPFR_RNDN);
  Real two_ellp = eb.ratio_upper;
  mpfr_mul_2si(two_ellp.raw(), two_ellp.raw(), 1, MPFR_RNDN);

  const long cap = max_working_precision();
  long L = 1;
  std::vector<std::pair<ComplexInterval, ComplexInterval>> vals(q);
  std::vector<Real> p_lo(q, Real(0L)), p_hi(q, Real(0L));
  std::vector<Real> ratio_lo(q, Real(0L)), ratio_hi(q, Real(0L));

  auto some_width_too_big = [&] {
    for (const auto& s : est.sums)
      if (!(s.width_upper() < e)) return true;
    return false;
  };

  while (some_width_too_big()) {
    if (2 * L > cap) {
      est.final_precision_bits = L;
      return est;  // precision ceiling; report failure honestly
    }
    L *= 2;
    est.rounds += 1;
    if (tel) {
      tel->note_precision(L);
      tel->oracle_evaluations += 2 * q;
    }
    for (long g = 0; g < q; ++g)
      vals[g] = o.both(circle_point(disc.center, disc.radius, g, q), Precision(L));

    bool violated = false;
    for (long g = 0; g < q && !violated; ++g) {
      auto pb = abs_lower_upper(vals[g].first);
      auto db = abs_lower_upper(vals[g].second);
      p_lo[g] = pb.first;
      p_hi[g] = pb.second;
      if (p_hi[g] < eb.p_lower) {  // certainly |p| < ell
        violated = true;
        break;
      }
      Real rlo = Real::zero(32), rhi = Real::zero(32);
      mpfr_div(rlo.raw(), db.first.raw(), pb.second.raw(), MPFR_RNDD);
      mpfr_div(rhi.raw(), db.second.raw(), pb.first.raw(), MPFR_RNDU);  // +inf when p_lo = 0
      ratio_lo[g] = rlo;
      ratio_hi[g] = rhi;
      if (ratio_lo[g] > eb.ratio_upper) {  // certainly |p'/p| > ell'
        violated = true;
        break;
      }
    }
    if (violated) {
      est.final_precision_bits = L;
      return est;  // success = false: the annulus contains a root
    }

    bool undecided = false;
    for (long g = 0; g < q; ++g) {
      if (p_lo[g] <= ell_half && ell_half <= p_hi[g]) {
        undecided = true;
        break;
      }
      if (ratio_lo[g] <= two_ellp && two_ellp <= ratio_hi[g]) {
        undecided = true;
        break;
      }
    }
    if (undecided) continue;  // raise L

    // All sample values are certified clear of the thresholds; assemble the
    // interval Cauchy sums at this precision.
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(L + 64);
    auto zetas = roots_of_unity_table(q, L + 16);
    std::vector<ComplexInterval> ratios(q);
    for (long g = 0; g < q; ++g) ratios[g] = ci_div(vals[g].second, vals[g].first, wp);
    RealInterval scale =
        ri_div(RealInterval(disc.radius), RealInterval(Real(q, kBoundPrec)), wp);
    for (long i = 0; i <= h; ++i) {
      ComplexInterval acc = ComplexInterval::exact(Real(0L), Real(0L));
      for (long g = 0; g < q; ++g)
        acc = ci_add(acc, ci_mul((*zetas)[(g * (i + 1)) % q], ratios[g], wp), wp);
      est.sums[i] = inflate(ci_scale_real(acc, scale, wp), e_quarter);
    }
  }

  est.success = true;
  est.final_precision_bits = L;
  return est;
}

}  // namespace croots
