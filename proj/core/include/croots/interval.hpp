#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "croots/errors.hpp"
#include "croots/real.hpp"

namespace croots {

/// Precision request for an oracle query: an answer at L has radius <= 2^-L.
class Precision {
 public:
  explicit Precision(long bits) : bits_(bits) {
    if (bits < 1) throw std::invalid_argument("Precision must be >= 1 bit");
  }
  long bits() const noexcept { return bits_; }

 private:
  long bits_;
};

/// Real interval in center/radius form.  The radius is kept at a small fixed
/// precision and only ever rounded up, so every operation yields a rigorous
/// enclosure of the exact result over all members of the operands.
struct RealInterval {
  Real center;
  Real radius;

  RealInterval() : center(0L), radius(0L) {}
  explicit RealInterval(Real c) : center(std::move(c)), radius(0L) {}
  RealInterval(Real c, Real r) : center(std::move(c)), radius(std::move(r)) {}

  static RealInterval whole() { return RealInterval(Real(0L), Real::inf()); }

  bool is_finite() const { return center.is_finite() && radius.is_finite(); }
  Real width_upper() const;  // 2 * radius, rounded up
};

struct ComplexInterval {
  RealInterval re, im;

  ComplexInterval() = default;
  ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval exact(Real r, Real i) {
    return ComplexInterval(RealInterval(std::move(r)), RealInterval(std::move(i)));
  }
  static ComplexInterval whole() { return {RealInterval::whole(), RealInterval::whole()}; }

  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  Real width_upper() const;   // max of the axis widths
  Real radius_upper() const;  // width / 2
};

// ---- real interval arithmetic (outward rounded, working precision wp) ----

RealInterval ri_add(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp);
RealInterval ri_sub(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp);
RealInterval ri_mul(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp);
/// Throws DivisorContainsZero when 0 may lie in b.
RealInterval ri_div(const RealInterval& a, const RealInterval& b, mpfr_prec_t wp);
RealInterval ri_neg(const RealInterval& a);
/// Exact scaling by 2^e.
RealInterval ri_scale2(const RealInterval& a, long e);
/// Interval from certified bounds lo <= hi.
RealInterval ri_from_bounds(const Real& lo, const Real& hi, mpfr_prec_t wp);
RealInterval ri_from_rational(const mpq_class& q, mpfr_prec_t wp);

Real ri_abs_lower(const RealInterval& a);  // max(0, |c|-r), rounded down
Real ri_abs_upper(const RealInterval& a);  // |c|+r, rounded up
bool ri_contains(const RealInterval& a, const mpq_class& q);
bool ri_contains_zero(const RealInterval& a);

// ---- complex interval arithmetic ----

ComplexInterval ci_add(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp);
ComplexInterval ci_sub(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp);
ComplexInterval ci_mul(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp);
/// Gauss-style division (a * conj(b)) / |b|^2 with a certified lower bound on
/// |b|^2.  Throws DivisorContainsZero when 0 may lie in b.
ComplexInterval ci_div(const ComplexInterval& a, const ComplexInterval& b, mpfr_prec_t wp);
ComplexInterval ci_neg(const ComplexInterval& a);
ComplexInterval ci_scale_real(const ComplexInterval& a, const RealInterval& s, mpfr_prec_t wp);
ComplexInterval ci_sqr(const ComplexInterval& a, mpfr_prec_t wp);

/// Certified bounds on |z| over the enclosure; lower is 0 when 0 may be inside.
std::pair<Real, Real> abs_lower_upper(const ComplexInterval& a);

bool ci_contains(const ComplexInterval& a, const mpq_class& re, const mpq_class& im);
bool ci_contains_zero(const ComplexInterval& a);
bool ci_contains_int(const ComplexInterval& a, long n);

/// Enclosure of exp(2*pi*i*g/q) with radius <= 2^-L.
ComplexInterval root_of_unity(long g, long q, Precision L);

/// Shared table of zeta_q^j enclosures, j in [0, q), each of radius
/// <= 2^-min_bits (the table precision is bucketed upward, so entries may be
/// tighter than requested).
std::shared_ptr<const std::vector<ComplexInterval>> roots_of_unity_table(long q, long min_bits);

}  // namespace croots
