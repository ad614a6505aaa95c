#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace croots {

/// Arbitrary-precision dyadic real: a thin RAII wrapper over mpfr_t.
///
/// A value carries its own precision and every value is exact (a dyadic
/// rational, or +-inf).  Operations that can round take the target precision
/// and rounding mode explicitly; the interval layer on top of this class is
/// responsible for turning rounding into rigorous enclosures.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  Real(long v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, v, MPFR_RNDN); }
  Real(double v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, v, MPFR_RNDN); }
  explicit Real(long v) : Real(v, 64) {}
  explicit Real(int v) : Real(static_cast<long>(v), 64) {}
  explicit Real(double v) : Real(v, 64) {}

  /// Zero at the given precision; the workhorse for result slots.
  static Real zero(mpfr_prec_t prec) {
    Real r;
    mpfr_set_prec(r.v_, prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_inf() const noexcept { return mpfr_inf_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_round() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Exact conversion; the value must be finite.
  mpq_class to_rational() const;

  /// Exact decimal dump of the dyadic value ("-3.25", "0.0009765625", ...).
  std::string exact_decimal() const;

  /// Parses an exact decimal produced by exact_decimal().  Throws
  /// std::invalid_argument if the string does not denote a dyadic rational.
  static Real from_decimal(const std::string& s);

  static Real from_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd);

  /// 2^e, exactly.
  static Real pow2(long e) {
    Real r = Real::zero(MPFR_PREC_MIN);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  static Real inf() {
    Real r = Real::zero(MPFR_PREC_MIN);
    mpfr_set_inf(r.v_, 1);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  /// Exact comparison against a rational.
  friend int cmp(const Real& a, const mpq_class& q) { return mpfr_cmp_q(a.v_, q.get_mpq_t()); }

 private:
  mpfr_t v_;
};

}  // namespace croots
