#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "croots/disc.hpp"
#include "croots/interval.hpp"

namespace croots {

struct RationalComplex {
  mpq_class re, im;

  RationalComplex() : re(0), im(0) {}
  RationalComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  explicit RationalComplex(long r) : re(r), im(0) {}
  bool is_zero() const { return re == 0 && im == 0; }
};

/// An oracle number: for any requested L it yields an enclosure of one fixed
/// complex number with radius <= 2^-L.
using PointOracle = std::function<ComplexInterval(Precision)>;

PointOracle exact_point(Point p);
PointOracle exact_point(const RationalComplex& p);
/// The Cauchy-sum sample point c + r * zeta_q^g.
PointOracle circle_point(Point c, Real r, long g, long q);

/// Working-precision ceiling (bits) shared by the evaluators; reads
/// CAUCHY_MAX_PRECISION once (default 4096).
long max_working_precision();

/// Black-box evaluator for one polynomial.  Querying at precision L returns an
/// enclosure of p(a) with radius <= 2^-L (best effort once the working
/// precision ceiling is reached; containment always holds).
struct EvaluationOracle {
  long degree = 0;
  RealInterval leading_coeff_modulus;  // enclosure of |lc(p)|
  std::function<ComplexInterval(const PointOracle&, Precision)> eval_at;

  ComplexInterval operator()(const PointOracle& a, Precision L) const { return eval_at(a, L); }
  /// Convenience entry for externally supplied enclosures: the input interval
  /// is taken as the full set of possible points.
  ComplexInterval operator()(const ComplexInterval& a, Precision L) const;
};

struct OraclePair {
  EvaluationOracle p;
  EvaluationOracle dp;
  /// Joint evaluation of (p, p'); families share the recurrence work here.
  std::function<std::pair<ComplexInterval, ComplexInterval>(const PointOracle&, Precision)>
      eval_both;

  std::pair<ComplexInterval, ComplexInterval> both(const PointOracle& a, Precision L) const {
    if (eval_both) return eval_both(a, L);
    return {p(a, L), dp(a, L)};
  }
};

/// Horner oracles from explicit coefficients, ascending degree order.
/// Throws ZeroLeadingCoefficient when the top coefficient vanishes.
OraclePair dense_oracle(std::vector<RationalComplex> coefficients);

/// Man_1(z) = z, Man_k(z) = z * Man_{k-1}(z)^2 + 1; degree 2^k - 1.
OraclePair mandelbrot_oracle(int k);

/// Run_0(z) = 1, Run_1(z) = z, Run_{k+1}(z) = Run_k(z)^2 + z * Run_{k-1}(z)^4.
OraclePair runnels_oracle(int k);

/// Mig_{d,a}(z) = z^d - 2 * (2^(a/2-1) z - 1)^2; requires d >= 3 and even a >= 2.
OraclePair mignotte_oracle(long d, long a);

/// Degree-d polynomial with `terms` non-zero terms of bitsize tau, generated
/// with the fixed seeded procedure (deterministic for a fixed seed).
OraclePair random_sparse_oracle(long d, long tau, long terms, unsigned long long seed);

/// p'(point) / p(point); propagates DivisorContainsZero when p's enclosure
/// contains zero at this precision.
ComplexInterval ratio_eval(const OraclePair& o, const ComplexInterval& point, Precision L);

/// Runnels degree sequence (deg_0 = 0, deg_1 = 1, ...).
long runnels_degree(int k);

}  // namespace croots
