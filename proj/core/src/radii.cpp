#include "croots/radii.hpp"

#include <stdexcept>

#include "croots/counting.hpp"

namespace croots {

namespace {
constexpr mpfr_prec_t kSievePrec = 96;

bool ratio_feasible(const mpq_class& a, const mpq_class& nu) {
  mpq_class fm = cover_inner_factor(a, mpq_class(4, 3));
  mpq_class fp = cover_outer_factor(a, mpq_class(4, 3));
  if (!(fp < 2)) return false;
  if (!(fm > 0 && fm < fp)) return false;
  // nu^(-1/4) < f-  <=>  f-^4 * nu > 1
  mpq_class f4 = fm * fm;
  f4 = f4 * f4;
  return f4 * nu > 1;
}
}  // namespace

Real largest_root_radius_bound(const OraclePair& o, Telemetry* tel, long max_doublings) {
  const long d = o.p.degree;
  Real r(1L, kSievePrec);
  for (long i = 0; i <= max_doublings; ++i) {
    int m = count_roots(o, Disc(Point(), r), mpq_class(4, 3), tel);
    if (m == static_cast<int>(d)) return r;
    mpfr_mul_2si(r.raw(), r.raw(), 1, MPFR_RNDN);
  }
  throw NoConvergence("largest_root_radius_bound: doubling cap reached");
}

mpq_class choose_cover_ratio(const mpq_class& nu) {
  if (!(nu > 1)) throw std::invalid_argument("choose_cover_ratio: nu > 1 required");
  if (nu == 2) return mpq_class(11, 10);
  // f-(a, 4/3) is decreasing in a; bisect for the largest feasible a.
  mpq_class lo = 1 + (nu - 1) / 32;
  while (!ratio_feasible(lo, nu)) lo = 1 + (lo - 1) / 2;
  mpq_class hi(13, 8);
  if (ratio_feasible(hi, nu)) return hi;
  for (int i = 0; i < 40; ++i) {
    mpq_class mid = (lo + hi) / 2;
    if (ratio_feasible(mid, nu))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Real root_radius(const OraclePair& o, const Disc& disc, long m, const mpq_class& nu,
                 const Real& eps, Telemetry* tel, RootRadiusInfo* info) {
  if (m < 1) throw std::invalid_argument("root_radius: m >= 1 required");
  if (eps.sign() <= 0) throw std::invalid_argument("root_radius: eps > 0 required");
  {
    Real half_r = disc.radius;
    mpfr_mul_2si(half_r.raw(), half_r.raw(), -1, MPFR_RNDN);
    if (eps > half_r) throw std::invalid_argument("root_radius: eps <= r/2 required");
  }
  const mpq_class a = choose_cover_ratio(nu);
  const mpq_class fm = cover_inner_factor(a, mpq_class(4, 3));
  if (info) info->cover_ratio = a;

  auto scale_down = [&](const Real& x, const mpq_class& f) {
    Real fx = Real::from_rational(f, kSievePrec, MPFR_RNDD);
    Real out = Real::zero(kSievePrec);
    mpfr_mul(out.raw(), x.raw(), fx.raw(), MPFR_RNDD);
    return out;
  };

  // probe D(c, eps) for a lower bound on r_m
  int m0 = count_roots(o, Disc(disc.center, eps), a, tel);
  if (m0 == static_cast<int>(m)) return eps;
  Real l = scale_down(eps, fm);
  Real u = disc.radius;

  // double exponential sieve: keep l <= r_m <= u until u <= nu * l
  long iters = 0;
  for (;;) {
    // stop when l >= u / nu, i.e. nu * l >= u (exact rational comparison)
    mpq_class lhs = nu * l.to_rational();
    if (!(lhs < u.to_rational())) break;
    ++iters;
    Real t = Real::zero(kSievePrec);
    mpfr_mul(t.raw(), l.raw(), u.raw(), MPFR_RNDN);
    mpfr_sqrt(t.raw(), t.raw(), MPFR_RNDN);
    int mt = count_roots(o, Disc(disc.center, t), a, tel);
    if (mt == static_cast<int>(m))
      u = t;
    else
      l = scale_down(t, fm);
  }
  if (info) info->sieve_iterations = iters;
  return u;
}

}  // namespace croots
