#include "croots/verification.hpp"

#include <algorithm>
#include <cmath>

#include "croots/interval.hpp"
#include "croots/radii.hpp"

namespace croots {

namespace {

// roots get squared; |coefficients| are all Pellet needs, signs are dropped
std::vector<ComplexInterval> graeffe_step(const std::vector<ComplexInterval>& c,
                                          mpfr_prec_t wp) {
  const size_t n = c.size();  // degree d = n-1
  std::vector<ComplexInterval> even, odd;
  for (size_t i = 0; i < n; ++i) {
    if (i % 2 == 0)
      even.push_back(c[i]);
    else
      odd.push_back(c[i]);
  }
  auto conv = [wp](const std::vector<ComplexInterval>& a, const std::vector<ComplexInterval>& b) {
    std::vector<ComplexInterval> out(a.size() + b.size() - 1,
                                     ComplexInterval::exact(Real(0L), Real(0L)));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        out[i + j] = ci_add(out[i + j], ci_mul(a[i], b[j], wp), wp);
    return out;
  };
  std::vector<ComplexInterval> e2 = conv(even, even);
  std::vector<ComplexInterval> out(n, ComplexInterval::exact(Real(0L), Real(0L)));
  for (size_t i = 0; i < e2.size() && i < n; ++i) out[i] = e2[i];
  if (!odd.empty()) {
    std::vector<ComplexInterval> o2 = conv(odd, odd);
    for (size_t i = 0; i + 1 < n + 1 && i < o2.size(); ++i) {
      if (i + 1 < n) out[i + 1] = ci_sub(out[i + 1], o2[i], wp);
    }
  }
  return out;
}

enum class Pellet { kAccept, kReject, kUndecided };

// Dominance test after root squaring: exactly k roots in the unit disc iff
// |q_k| exceeds the sum of all other coefficient moduli.
Pellet pellet_count(const std::vector<ComplexInterval>& q, long m, mpfr_prec_t wp) {
  const long d = static_cast<long>(q.size()) - 1;
  std::vector<Real> lo(d + 1, Real(0L)), hi(d + 1, Real(0L));
  for (long i = 0; i <= d; ++i) {
    auto b = abs_lower_upper(q[i]);
    lo[i] = b.first;
    hi[i] = b.second;
  }
  for (long k = 0; k <= d; ++k) {
    Real rest_hi = Real::zero(32), rest_lo = Real::zero(32);
    mpfr_set_zero(rest_hi.raw(), 1);
    mpfr_set_zero(rest_lo.raw(), 1);
    for (long i = 0; i <= d; ++i) {
      if (i == k) continue;
      mpfr_add(rest_hi.raw(), rest_hi.raw(), hi[i].raw(), MPFR_RNDU);
      mpfr_add(rest_lo.raw(), rest_lo.raw(), lo[i].raw(), MPFR_RNDD);
    }
    if (lo[k] > rest_hi) return k == m ? Pellet::kAccept : Pellet::kReject;
  }
  (void)wp;
  return Pellet::kUndecided;
}

}  // namespace

VerificationResult verify_output(const OraclePair& o, const std::vector<Cluster>& clusters,
                                 long degree, const Real& scale, Telemetry* tel) {
  VerificationResult res;
  long total = 0;
  for (const Cluster& c : clusters) total += c.multiplicity;
  if (total != degree) {
    res.diagnostic = "multiplicities add up to " + std::to_string(total) + ", degree is " +
                     std::to_string(degree);
    return res;
  }
  std::vector<const Cluster*> multi;
  for (const Cluster& c : clusters)
    if (c.multiplicity > 1) multi.push_back(&c);
  if (multi.empty()) {
    res.ok = true;
    return res;
  }

  const long d = degree;
  const long n = d + 1;
  const long cap = max_working_precision();
  long graeffe_rounds =
      static_cast<long>(std::ceil(std::log2(std::max(2.0, std::log2(std::max<double>(d, 4)))))) +
      3;

  for (long L = 128; L <= std::min<long>(cap, 4096); L *= 2) {
    if (tel) tel->note_precision(L);
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(L + 64);
    // evaluation-interpolation at n root-of-unity nodes of radius `scale`
    std::vector<ComplexInterval> vals(n);
    for (long j = 0; j < n; ++j) {
      vals[j] = o.p(circle_point(Point(), scale, j, n), Precision(L));
      if (tel) tel->oracle_evaluations += 1;
    }
    std::vector<ComplexInterval> coef(n);
    RealInterval s_ball(scale);
    RealInterval s_pow(Real(1L));  // s^k
    bool bad = false;
    for (long k = 0; k < n && !bad; ++k) {
      ComplexInterval acc = ComplexInterval::exact(Real(0L), Real(0L));
      for (long j = 0; j < n; ++j) {
        ComplexInterval w = root_of_unity(((n - k) * j) % n, n, Precision(L + 16));
        acc = ci_add(acc, ci_mul(vals[j], w, wp), wp);
      }
      RealInterval den = ri_mul(s_pow, RealInterval(Real(n, 64)), wp);
      try {
        coef[k] = {ri_div(acc.re, den, wp), ri_div(acc.im, den, wp)};
      } catch (const DivisorContainsZero&) {
        bad = true;
      }
      s_pow = ri_mul(s_pow, s_ball, wp);
    }
    if (bad) continue;

    bool undecided = false;
    for (const Cluster* c : multi) {
      // shift to the disc center, scale to its radius
      std::vector<ComplexInterval> b = coef;
      ComplexInterval gamma = ComplexInterval::exact(c->disc.center.re, c->disc.center.im);
      for (long i = 0; i < n; ++i)
        for (long k = n - 2; k >= i; --k)
          b[k] = ci_add(b[k], ci_mul(gamma, b[k + 1], wp), wp);
      RealInterval r_ball(c->disc.radius);
      RealInterval r_pow(Real(1L));
      for (long k = 0; k < n; ++k) {
        b[k] = ci_scale_real(b[k], r_pow, wp);
        r_pow = ri_mul(r_pow, r_ball, wp);
      }
      for (long it = 0; it < graeffe_rounds; ++it) b = graeffe_step(b, wp);
      Pellet verdict = pellet_count(b, c->multiplicity, wp);
      if (verdict == Pellet::kReject) {
        res.diagnostic = "Graeffe-Pellet recount rejected a multiplicity-" +
                         std::to_string(c->multiplicity) + " disc";
        return res;
      }
      if (verdict == Pellet::kUndecided) {
        undecided = true;
        break;
      }
    }
    if (!undecided) {
      res.ok = true;
      return res;
    }
  }
  res.unavailable = true;
  res.diagnostic = "coefficient recovery exceeded the precision budget";
  return res;
}

VerificationResult verify_output(const OraclePair& o, const std::vector<Cluster>& clusters,
                                 long degree, Telemetry* tel) {
  Real r0 = largest_root_radius_bound(o, tel);
  Real scale(r0.precision() + 4);
  mpfr_mul_si(scale.raw(), r0.raw(), 3, MPFR_RNDN);
  mpfr_mul_2si(scale.raw(), scale.raw(), -1, MPFR_RNDN);  // (3/2) r0
  return verify_output(o, clusters, degree, scale, tel);
}

}  // namespace croots
