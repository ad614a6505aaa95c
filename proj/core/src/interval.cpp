#include "croots/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace croots {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;

// Adds one ulp of c (at working precision wp) to rad; upper bound on the
// rounding error of the center operation that produced c.
void add_center_ulp(mpfr_ptr rad, mpfr_srcptr c, mpfr_prec_t wp, int ternary) {
  if (ternary == 0 || mpfr_zero_p(c) || !mpfr_number_p(c)) return;
  mpfr_exp_t e = mpfr_get_exp(c);
  mpfr_t u;
  mpfr_init2(u, MPFR_PREC_MIN);
  mpfr_set_ui_2exp(u, 1, e - wp, MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
  mpfr_clear(u);
}

Real abs_up(const Real& x) {
  Real r = Real::zero(kRadPrec);
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDU);
  return r;
}

}  // namespace

Real RealInterval::width_upper() const {
  Real w = Real::zero(kRadPrec);
  mpfr_mul_2si(w.raw(), radius.raw(), 1, MPFR_RNDU);
  return w;
}

Real ComplexInterval::width_upper() const {
  Real a = re.width_upper();
  Real b = im.width_upper();
  return a >= b ? a : b;
}

Real ComplexInterval::radius_upper() const {
  Real w = width_upper();
  mpfr_mul_2si(w.raw(), w.raw(), -1, MPFR_RNDU);
  return w;
}

RealInterval ri_add(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp) {
  RealInterval out(Real::zero(wp), Real::zero(kRadPrec));
  int t = mpfr_add(out.center.raw(), a.center.raw(), b.center.raw(), MPFR_RNDN);
  mpfr_add(out.radius.raw(), a.radius.raw(), b.radius.raw(), MPFR_RNDU);
  add_center_ulp(out.radius.raw(), out.center.raw(), wp, t);
  return out;
}

RealInterval ri_sub(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp) {
  RealInterval out(Real::zero(wp), Real::zero(kRadPrec));
  int t = mpfr_sub(out.center.raw(), a.center.raw(), b.center.raw(), MPFR_RNDN);
  mpfr_add(out.radius.raw(), a.radius.raw(), b.radius.raw(), MPFR_RNDU);
  add_center_ulp(out.radius.raw(), out.center.raw(), wp, t);
  return out;
}

RealInterval ri_mul(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp) {
  RealInterval out(Real::zero(wp), Real::zero(kRadPrec));
  int t = mpfr_mul(out.center.raw(), a.center.raw(), b.center.raw(), MPFR_RNDN);
  // |a.c|*b.r + |b.c|*a.r + a.r*b.r
  Real ac = abs_up(a.center), bc = abs_up(b.center);
  Real t1 = Real::zero(kRadPrec), t2 = Real::zero(kRadPrec), t3 = Real::zero(kRadPrec);
  mpfr_mul(t1.raw(), ac.raw(), b.radius.raw(), MPFR_RNDU);
  mpfr_mul(t2.raw(), bc.raw(), a.radius.raw(), MPFR_RNDU);
  mpfr_mul(t3.raw(), a.radius.raw(), b.radius.raw(), MPFR_RNDU);
  mpfr_add(out.radius.raw(), t1.raw(), t2.raw(), MPFR_RNDU);
  mpfr_add(out.radius.raw(), out.radius.raw(), t3.raw(), MPFR_RNDU);
  add_center_ulp(out.radius.raw(), out.center.raw(), wp, t);
  return out;
}

RealInterval ri_div(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp) {
  Real blo = ri_abs_lower(b);
  if (blo.sign() <= 0) throw DivisorContainsZero();
  RealInterval out(Real::zero(wp), Real::zero(kRadPrec));
  int t = mpfr_div(out.center.raw(), a.center.raw(), b.center.raw(), MPFR_RNDN);
  // |x/y - a.c/b.c| <= (a.r*|b.c| + b.r*|a.c|) / (|b.c| * (|b.c| - b.r))
  Real ac = abs_up(a.center), bc = abs_up(b.center);
  Real num = Real::zero(kRadPrec), t2 = Real::zero(kRadPrec), den = Real::zero(kRadPrec), bcd = Real::zero(kRadPrec);
  mpfr_mul(num.raw(), a.radius.raw(), bc.raw(), MPFR_RNDU);
  mpfr_mul(t2.raw(), b.radius.raw(), ac.raw(), MPFR_RNDU);
  mpfr_add(num.raw(), num.raw(), t2.raw(), MPFR_RNDU);
  mpfr_abs(bcd.raw(), b.center.raw(), MPFR_RNDD);
  mpfr_sub(den.raw(), bcd.raw(), b.radius.raw(), MPFR_RNDD);
  mpfr_mul(den.raw(), den.raw(), bcd.raw(), MPFR_RNDD);
  if (den.sign() <= 0) throw DivisorContainsZero();
  mpfr_div(out.radius.raw(), num.raw(), den.raw(), MPFR_RNDU);
  add_center_ulp(out.radius.raw(), out.center.raw(), wp, t);
  return out;
}

RealInterval ri_neg(const RealInterval& a) {
  RealInterval out = a;
  mpfr_neg(out.center.raw(), out.center.raw(), MPFR_RNDN);
  return out;
}

RealInterval ri_scale2(const RealInterval& a, long e) {
  RealInterval out = a;
  mpfr_mul_2si(out.center.raw(), out.center.raw(), e, MPFR_RNDN);
  mpfr_mul_2si(out.radius.raw(), out.radius.raw(), e, MPFR_RNDU);
  return out;
}

RealInterval ri_from_bounds(const Real& lo, const Real& hi, mpfr_prec_t wp) {
  RealInterval out(Real::zero(wp), Real::zero(kRadPrec));
  mpfr_add(out.center.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_mul_2si(out.center.raw(), out.center.raw(), -1, MPFR_RNDN);
  // radius = max(hi - c, c - lo) rounded up absorbs the center rounding
  Real r1 = Real::zero(kRadPrec), r2 = Real::zero(kRadPrec);
  mpfr_sub(r1.raw(), hi.raw(), out.center.raw(), MPFR_RNDU);
  mpfr_sub(r2.raw(), out.center.raw(), lo.raw(), MPFR_RNDU);
  mpfr_max(out.radius.raw(), r1.raw(), r2.raw(), MPFR_RNDU);
  return out;
}

RealInterval ri_from_rational(const mpq_class& q, mpfr_prec_t wp) {
  RealInterval out(Real::zero(wp), Real::zero(kRadPrec));
  int t = mpfr_set_q(out.center.raw(), q.get_mpq_t(), MPFR_RNDN);
  add_center_ulp(out.radius.raw(), out.center.raw(), wp, t);
  return out;
}

Real ri_abs_lower(const RealInterval& a) {
  Real lo = Real::zero(kRadPrec);
  mpfr_abs(lo.raw(), a.center.raw(), MPFR_RNDD);
  mpfr_sub(lo.raw(), lo.raw(), a.radius.raw(), MPFR_RNDD);
  if (lo.sign() < 0) mpfr_set_zero(lo.raw(), 1);
  return lo;
}

Real ri_abs_upper(const RealInterval& a) {
  Real hi = Real::zero(kRadPrec);
  mpfr_abs(hi.raw(), a.center.raw(), MPFR_RNDU);
  mpfr_add(hi.raw(), hi.raw(), a.radius.raw(), MPFR_RNDU);
  return hi;
}

bool ri_contains(const RealInterval& a, const mpq_class& q) {
  if (a.radius.is_inf()) return true;
  if (!a.is_finite()) return false;
  // |q - c| <= r, checked exactly in rational arithmetic
  mpq_class d = q - a.center.to_rational();
  mpq_class ad = abs(d);
  return ad <= a.radius.to_rational();
}

bool ri_contains_zero(const RealInterval& a) { return ri_contains(a, mpq_class(0)); }

ComplexInterval ci_add(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp) {
  return {ri_add(a.re, b.re, wp), ri_add(a.im, b.im, wp)};
}

ComplexInterval ci_sub(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp) {
  return {ri_sub(a.re, b.re, wp), ri_sub(a.im, b.im, wp)};
}

ComplexInterval ci_mul(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp) {
  RealInterval rr = ri_sub(ri_mul(a.re, b.re, wp), ri_mul(a.im, b.im, wp), wp);
  RealInterval ii = ri_add(ri_mul(a.re, b.im, wp), ri_mul(a.im, b.re, wp), wp);
  return {std::move(rr), std::move(ii)};
}

ComplexInterval ci_sqr(const ComplexInterval& a, mpfr_prec_t wp) { return ci_mul(a, a, wp); }

ComplexInterval ci_div(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp) {
  // |b|^2 as an interval from certified per-axis bounds; the naive ball square
  // can dip below zero for enclosures that exclude zero.  The bounds carry
  // working precision: the divisor's relative width caps the quotient's, so
  // low-precision bounds would floor it.
  auto axis_bounds = [wp](const RealInterval& x, Real& lo_out, Real& hi_out) {
    lo_out = Real::zero(wp);
    hi_out = Real::zero(wp);
    mpfr_abs(lo_out.raw(), x.center.raw(), MPFR_RNDD);
    mpfr_sub(lo_out.raw(), lo_out.raw(), x.radius.raw(), MPFR_RNDD);
    if (lo_out.sign() < 0) mpfr_set_zero(lo_out.raw(), 1);
    mpfr_abs(hi_out.raw(), x.center.raw(), MPFR_RNDU);
    mpfr_add(hi_out.raw(), hi_out.raw(), x.radius.raw(), MPFR_RNDU);
  };
  Real re_lo, re_hi, im_lo, im_hi;
  axis_bounds(b.re, re_lo, re_hi);
  axis_bounds(b.im, im_lo, im_hi);
  Real lo = Real::zero(wp), hi = Real::zero(wp), t = Real::zero(wp);
  mpfr_sqr(lo.raw(), re_lo.raw(), MPFR_RNDD);
  mpfr_sqr(t.raw(), im_lo.raw(), MPFR_RNDD);
  mpfr_add(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
  mpfr_sqr(hi.raw(), re_hi.raw(), MPFR_RNDU);
  mpfr_sqr(t.raw(), im_hi.raw(), MPFR_RNDU);
  mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
  if (lo.sign() <= 0) throw DivisorContainsZero();
  RealInterval den = ri_from_bounds(lo, hi, wp);

  ComplexInterval conj{b.re, ri_neg(b.im)};
  ComplexInterval num = ci_mul(a, conj, wp);
  return {ri_div(num.re, den, wp), ri_div(num.im, den, wp)};
}

ComplexInterval ci_neg(const ComplexInterval& a) { return {ri_neg(a.re), ri_neg(a.im)}; }

ComplexInterval ci_scale_real(const ComplexInterval& a, const RealInterval& s, mpfr_prec_t wp) {
  return {ri_mul(a.re, s, wp), ri_mul(a.im, s, wp)};
}

std::pair<Real, Real> abs_lower_upper(const ComplexInterval& a) {
  Real re_lo = ri_abs_lower(a.re), im_lo = ri_abs_lower(a.im);
  Real re_hi = ri_abs_upper(a.re), im_hi = ri_abs_upper(a.im);
  Real lo = Real::zero(kRadPrec), hi = Real::zero(kRadPrec);
  mpfr_hypot(lo.raw(), re_lo.raw(), im_lo.raw(), MPFR_RNDD);
  mpfr_hypot(hi.raw(), re_hi.raw(), im_hi.raw(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

bool ci_contains(const ComplexInterval& a, const mpq_class& re, const mpq_class& im) {
  return ri_contains(a.re, re) && ri_contains(a.im, im);
}

bool ci_contains_zero(const ComplexInterval& a) { return ci_contains(a, 0, 0); }

bool ci_contains_int(const ComplexInterval& a, long n) { return ci_contains(a, mpq_class(n), 0); }

std::shared_ptr<const std::vector<ComplexInterval>> roots_of_unity_table(long q, long min_bits) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::shared_ptr<const std::vector<ComplexInterval>>>
      cache;
  long bucket = 32;
  while (bucket < min_bits) bucket *= 2;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, bucket);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<std::vector<ComplexInterval>>();
  t->reserve(q);
  for (long j = 0; j < q; ++j) t->push_back(root_of_unity(j, q, Precision(bucket)));
  if (cache.size() > 512) cache.clear();
  cache.emplace(key, t);
  return t;
}

ComplexInterval root_of_unity(long g, long q, Precision L) {
  if (q < 1) throw std::invalid_argument("root_of_unity: q must be positive");
  g %= q;
  if (g < 0) g += q;
  // exact quadrant values
  long num = 4 * g;
  if (num % q == 0) {
    switch (num / q) {
      case 0: return ComplexInterval::exact(Real(1L), Real(0L));
      case 1: return ComplexInterval::exact(Real(0L), Real(1L));
      case 2: return ComplexInterval::exact(Real(-1L), Real(0L));
      case 3: return ComplexInterval::exact(Real(0L), Real(-1L));
    }
  }
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(L.bits() + 16);
  Real target = Real::pow2(-L.bits());
  for (;;) {
    RealInterval pi(Real::zero(wp), Real::zero(kRadPrec));
    int t = mpfr_const_pi(pi.center.raw(), MPFR_RNDN);
    add_center_ulp(pi.radius.raw(), pi.center.raw(), wp, t);
    RealInterval ang = ri_mul(pi, ri_from_rational(mpq_class(2 * g, q), wp), wp);
    Real c = Real::zero(wp), s = Real::zero(wp);
    mpfr_sin_cos(s.raw(), c.raw(), ang.center.raw(), MPFR_RNDN);
    // sin and cos are 1-Lipschitz, so the angle radius carries over directly
    RealInterval co(c, Real::zero(kRadPrec)), si(s, Real::zero(kRadPrec));
    mpfr_set(co.radius.raw(), ang.radius.raw(), MPFR_RNDU);
    mpfr_set(si.radius.raw(), ang.radius.raw(), MPFR_RNDU);
    add_center_ulp(co.radius.raw(), co.center.raw(), wp, 1);
    add_center_ulp(si.radius.raw(), si.center.raw(), wp, 1);
    if (co.radius <= target && si.radius <= target) return {std::move(co), std::move(si)};
    wp *= 2;
  }
}

}  // namespace croots
