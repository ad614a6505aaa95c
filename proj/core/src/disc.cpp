#include "croots/disc.hpp"

namespace croots {

namespace {
constexpr mpfr_prec_t kGeomPrec = 96;

Real mul_q(const Real& x, const mpq_class& f, mpfr_rnd_t rnd) {
  Real q = Real::from_rational(f, kGeomPrec, rnd);
  Real out = Real::zero(kGeomPrec);
  mpfr_mul(out.raw(), x.raw(), q.raw(), rnd);
  return out;
}
}  // namespace

Disc dilated(const Disc& d, long factor) {
  Real r(d.radius.precision() + 8);
  mpfr_mul_si(r.raw(), d.radius.raw(), factor, MPFR_RNDN);
  return {d.center, std::move(r)};
}

Disc dilated2(const Disc& d, long e) {
  Real r = d.radius;
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return {d.center, std::move(r)};
}

Real dist_upper(const Point& a, const Point& b) {
  Real dx = Real::zero(kGeomPrec), dy = Real::zero(kGeomPrec), out = Real::zero(kGeomPrec);
  mpfr_sub(dx.raw(), a.re.raw(), b.re.raw(), MPFR_RNDA);
  mpfr_sub(dy.raw(), a.im.raw(), b.im.raw(), MPFR_RNDA);
  mpfr_hypot(out.raw(), dx.raw(), dy.raw(), MPFR_RNDU);
  return out;
}

Real dist_lower(const Point& a, const Point& b) {
  Real dx = Real::zero(kGeomPrec), dy = Real::zero(kGeomPrec), out = Real::zero(kGeomPrec);
  mpfr_sub(dx.raw(), a.re.raw(), b.re.raw(), MPFR_RNDZ);
  mpfr_sub(dy.raw(), a.im.raw(), b.im.raw(), MPFR_RNDZ);
  mpfr_hypot(out.raw(), dx.raw(), dy.raw(), MPFR_RNDD);
  return out;
}

bool discs_disjoint(const Disc& a, const mpq_class& fa, const Disc& b, const mpq_class& fb) {
  Real lo = dist_lower(a.center, b.center);
  Real ra = mul_q(a.radius, fa, MPFR_RNDU);
  Real rb = mul_q(b.radius, fb, MPFR_RNDU);
  Real sum = Real::zero(kGeomPrec);
  mpfr_add(sum.raw(), ra.raw(), rb.raw(), MPFR_RNDU);
  return lo > sum;
}

bool disc_inside(const Disc& a, const mpq_class& fa, const Disc& b, const mpq_class& fb) {
  Real hi = dist_upper(a.center, b.center);
  Real ra = mul_q(a.radius, fa, MPFR_RNDU);
  Real rb = mul_q(b.radius, fb, MPFR_RNDD);
  Real need = Real::zero(kGeomPrec);
  mpfr_add(need.raw(), hi.raw(), ra.raw(), MPFR_RNDU);
  return need <= rb;
}

}  // namespace croots
