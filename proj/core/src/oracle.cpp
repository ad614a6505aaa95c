#include "croots/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace croots {

namespace {

ComplexInterval ci_from_rational(const RationalComplex& c, mpfr_prec_t wp) {
  return {ri_from_rational(c.re, wp), ri_from_rational(c.im, wp)};
}

RealInterval abs_enclosure(const RationalComplex& c) {
  ComplexInterval ci = ci_from_rational(c, 128);
  auto [lo, hi] = abs_lower_upper(ci);
  return ri_from_bounds(lo, hi, 64);
}

using EvalFn = std::function<ComplexInterval(const ComplexInterval&, mpfr_prec_t)>;

// Retry loop shared by all evaluators: raise the working precision until the
// output enclosure meets the 2^-L radius contract.  Stops early when the
// radius plateaus (input-width limited) or the precision ceiling is reached;
// containment holds in every case.
ComplexInterval eval_adaptive(const PointOracle& a, Precision L, const EvalFn& f) {
  const long target = L.bits();
  const long cap = max_working_precision();
  Real goal = Real::pow2(-target);
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(std::min<long>(target + 48, cap));
  ComplexInterval best;
  Real best_rad = Real::inf();
  bool have_best = false;
  for (;;) {
    ComplexInterval z = a(Precision(std::max<long>(wp, 2)));
    ComplexInterval v = f(z, wp);
    Real rad = v.radius_upper();
    if (rad <= goal) return v;
    if (rad.is_finite()) {
      // less than one bit gained since the last round: input-width limited
      Real doubled = rad;
      mpfr_mul_2si(doubled.raw(), doubled.raw(), 1, MPFR_RNDD);
      if (have_best && doubled > best_rad) return best_rad <= rad ? best : v;
      if (!have_best || rad < best_rad) {
        best = v;
        best_rad = rad;
        have_best = true;
      }
    }
    if (wp >= cap) return have_best ? best : v;
    long excess = 32;
    if (rad.is_finite() && !rad.is_zero())
      excess = std::max<long>(mpfr_get_exp(rad.raw()) + target + 16, 32);
    wp = static_cast<mpfr_prec_t>(std::min<long>(wp + excess, cap));
  }
}

std::pair<ComplexInterval, ComplexInterval> eval_adaptive_pair(
    const PointOracle& a, Precision L,
    const std::function<std::pair<ComplexInterval, ComplexInterval>(const ComplexInterval&,
                                                                    mpfr_prec_t)>& f) {
  const long target = L.bits();
  const long cap = max_working_precision();
  Real goal = Real::pow2(-target);
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(std::min<long>(target + 48, cap));
  std::pair<ComplexInterval, ComplexInterval> best;
  Real best_rad = Real::inf();
  bool have_best = false;
  for (;;) {
    ComplexInterval z = a(Precision(std::max<long>(wp, 2)));
    auto v = f(z, wp);
    Real r1 = v.first.radius_upper();
    Real r2 = v.second.radius_upper();
    Real rad = r1 >= r2 ? r1 : r2;
    if (rad <= goal) return v;
    if (rad.is_finite()) {
      Real doubled = rad;
      mpfr_mul_2si(doubled.raw(), doubled.raw(), 1, MPFR_RNDD);
      if (have_best && doubled > best_rad) return best_rad <= rad ? best : v;
      if (!have_best || rad < best_rad) {
        best = v;
        best_rad = rad;
        have_best = true;
      }
    }
    if (wp >= cap) return have_best ? best : v;
    long excess = 32;
    if (rad.is_finite() && !rad.is_zero())
      excess = std::max<long>(mpfr_get_exp(rad.raw()) + target + 16, 32);
    wp = static_cast<mpfr_prec_t>(std::min<long>(wp + excess, cap));
  }
}

// ---- dense / sparse bodies ----

struct DenseBody {
  std::vector<RationalComplex> coefs;  // ascending
  std::mutex mu;
  std::map<mpfr_prec_t, std::shared_ptr<const std::vector<ComplexInterval>>> cache;

  std::shared_ptr<const std::vector<ComplexInterval>> balls(mpfr_prec_t wp) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(wp);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<std::vector<ComplexInterval>>();
    b->reserve(coefs.size());
    for (const auto& c : coefs) b->push_back(ci_from_rational(c, wp));
    if (cache.size() > 128) cache.clear();
    cache.emplace(wp, b);
    return b;
  }
};

ComplexInterval horner(const std::vector<ComplexInterval>& c, const ComplexInterval& z,
                       mpfr_prec_t wp) {
  ComplexInterval v = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) v = ci_add(ci_mul(v, z, wp), *it, wp);
  return v;
}

// Horner pass producing p and p' together.
std::pair<ComplexInterval, ComplexInterval> horner_joint(const std::vector<ComplexInterval>& c,
                                                         const ComplexInterval& z,
                                                         mpfr_prec_t wp) {
  ComplexInterval v = c.back();
  ComplexInterval dv = ComplexInterval::exact(Real(0L), Real(0L));
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    dv = ci_add(ci_mul(dv, z, wp), v, wp);
    v = ci_add(ci_mul(v, z, wp), *it, wp);
  }
  return {std::move(v), std::move(dv)};
}

struct SparseTerm {
  long exponent;
  RationalComplex coef;
};

struct SparseBody {
  std::vector<SparseTerm> terms;   // descending exponents
  std::vector<SparseTerm> dterms;  // derivative, descending exponents

  static std::vector<SparseTerm> derivative(const std::vector<SparseTerm>& t) {
    std::vector<SparseTerm> d;
    for (const auto& s : t) {
      if (s.exponent == 0) continue;
      d.push_back({s.exponent - 1,
                   RationalComplex(s.coef.re * s.exponent, s.coef.im * s.exponent)});
    }
    return d;
  }
};

// z^n by binary powering on a lazily extended squaring table.
ComplexInterval ci_pow(std::vector<ComplexInterval>& squarings, const ComplexInterval& z, long n,
                       mpfr_prec_t wp) {
  if (n == 0) return ComplexInterval::exact(Real(1L), Real(0L));
  if (squarings.empty()) squarings.push_back(z);
  while ((1L << (squarings.size() - 1)) < n && squarings.size() < 63)
    squarings.push_back(ci_sqr(squarings.back(), wp));
  ComplexInterval acc = ComplexInterval::exact(Real(1L), Real(0L));
  bool started = false;
  for (size_t b = 0; (1L << b) <= n; ++b)
    if (n & (1L << b)) {
      acc = started ? ci_mul(acc, squarings[b], wp) : squarings[b];
      started = true;
    }
  return acc;
}

ComplexInterval sparse_eval(const std::vector<SparseTerm>& terms, const ComplexInterval& z,
                            mpfr_prec_t wp) {
  if (terms.empty()) return ComplexInterval::exact(Real(0L), Real(0L));
  std::vector<ComplexInterval> sq;
  ComplexInterval v = ci_from_rational(terms.front().coef, wp);
  for (size_t i = 1; i < terms.size(); ++i) {
    long gap = terms[i - 1].exponent - terms[i].exponent;
    v = ci_add(ci_mul(v, ci_pow(sq, z, gap, wp), wp), ci_from_rational(terms[i].coef, wp), wp);
  }
  long tail = terms.back().exponent;
  if (tail > 0) v = ci_mul(v, ci_pow(sq, z, tail, wp), wp);
  return v;
}

EvaluationOracle make_oracle(long degree, RealInterval lc_mod, EvalFn f) {
  EvaluationOracle o;
  o.degree = degree;
  o.leading_coeff_modulus = std::move(lc_mod);
  o.eval_at = [f = std::move(f)](const PointOracle& a, Precision L) {
    return eval_adaptive(a, L, f);
  };
  return o;
}

// Deterministic helpers for the seeded sparse generator.
mpz_class draw_bits(std::mt19937_64& rng, unsigned long bits) {
  mpz_class v = 0;
  unsigned long produced = 0;
  while (produced < bits) {
    unsigned long long w = rng();
    unsigned long take = std::min<unsigned long>(64, bits - produced);
    if (take < 64) w &= (take == 64 ? ~0ULL : ((1ULL << take) - 1));
    mpz_class chunk(static_cast<unsigned long>(w >> 32));
    chunk <<= 32;
    chunk += static_cast<unsigned long>(w & 0xffffffffULL);
    chunk <<= produced;
    v += chunk;
    produced += take;
  }
  return v;
}

// Uniform integer in [-2^(tau-1), 2^(tau-1)], inclusive.
mpz_class draw_coefficient(std::mt19937_64& rng, long tau) {
  mpz_class bound = 1;
  bound <<= static_cast<unsigned long>(tau);  // 2^tau
  for (;;) {
    mpz_class u = draw_bits(rng, static_cast<unsigned long>(tau + 1));
    if (u <= bound) {
      mpz_class half = bound >> 1;
      return u - half;
    }
  }
}

long draw_index(std::mt19937_64& rng, long lo, long hi) {  // inclusive range
  unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
  unsigned long long limit = (~0ULL / span) * span;
  for (;;) {
    unsigned long long w = rng();
    if (w < limit) return lo + static_cast<long>(w % span);
  }
}

}  // namespace

long max_working_precision() {
  static const long cap = [] {
    const char* s = std::getenv("CAUCHY_MAX_PRECISION");
    if (s == nullptr) return 4096L;
    long v = std::atol(s);
    return v >= 64 ? v : 4096L;
  }();
  return cap;
}

PointOracle exact_point(Point p) {
  ComplexInterval ci = ComplexInterval::exact(p.re, p.im);
  return [ci](Precision) { return ci; };
}

PointOracle exact_point(const RationalComplex& p) {
  mpq_class re = p.re, im = p.im;
  return [re, im](Precision L) {
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(L.bits() + 8);
    Real goal = Real::pow2(-L.bits());
    for (;;) {
      ComplexInterval v{ri_from_rational(re, wp), ri_from_rational(im, wp)};
      if (v.radius_upper() <= goal) return v;
      wp *= 2;
    }
  };
}

PointOracle circle_point(Point c, Real r, long g, long q) {
  return [c, r, g, q](Precision L) {
    long extra = 4;
    if (!r.is_zero()) extra += std::max<long>(0, mpfr_get_exp(r.raw()));
    for (;;) {
      auto table = roots_of_unity_table(q, L.bits() + extra);
      mpfr_prec_t wp = static_cast<mpfr_prec_t>(
          std::max<long>({L.bits() + extra + 16, c.re.precision(), r.precision()}) + 8);
      ComplexInterval pt = ci_add(ComplexInterval::exact(c.re, c.im),
                                  ci_scale_real((*table)[g % q], RealInterval(r), wp), wp);
      if (pt.radius_upper() <= Real::pow2(-L.bits())) return pt;
      extra += 32;
    }
  };
}

ComplexInterval EvaluationOracle::operator()(const ComplexInterval& a, Precision L) const {
  return eval_at([a](Precision) { return a; }, L);
}

OraclePair dense_oracle(std::vector<RationalComplex> coefficients) {
  if (coefficients.empty() || coefficients.back().is_zero()) throw ZeroLeadingCoefficient();
  long d = static_cast<long>(coefficients.size()) - 1;
  auto body = std::make_shared<DenseBody>();
  body->coefs = std::move(coefficients);

  RealInterval lc = abs_enclosure(body->coefs.back());
  EvalFn ep = [body](const ComplexInterval& z, mpfr_prec_t wp) {
    return horner(*body->balls(wp), z, wp);
  };

  std::vector<RationalComplex> dc;
  for (long k = 1; k <= d; ++k)
    dc.push_back({body->coefs[k].re * k, body->coefs[k].im * k});
  if (dc.empty()) dc.push_back(RationalComplex(0L));
  auto dbody = std::make_shared<DenseBody>();
  dbody->coefs = std::move(dc);
  RealInterval dlc = abs_enclosure(dbody->coefs.back());
  EvalFn edp = [dbody](const ComplexInterval& z, mpfr_prec_t wp) {
    return horner(*dbody->balls(wp), z, wp);
  };

  OraclePair pair;
  pair.p = make_oracle(d, lc, ep);
  pair.dp = make_oracle(std::max<long>(d - 1, 0), dlc, edp);
  pair.eval_both = [body](const PointOracle& a, Precision L) {
    return eval_adaptive_pair(a, L, [body](const ComplexInterval& z, mpfr_prec_t wp) {
      return horner_joint(*body->balls(wp), z, wp);
    });
  };
  return pair;
}

OraclePair mandelbrot_oracle(int k) {
  if (k < 1) throw std::invalid_argument("mandelbrot_oracle: k >= 1 required");
  long d = (1L << k) - 1;

  auto joint = [k](const ComplexInterval& z, mpfr_prec_t wp) {
    ComplexInterval v = z;
    ComplexInterval dv = ComplexInterval::exact(Real(1L), Real(0L));
    for (int i = 2; i <= k; ++i) {
      ComplexInterval u = ci_sqr(v, wp);
      ComplexInterval zv = ci_mul(z, v, wp);
      dv = ci_add(u, ci_scale_real(ci_mul(zv, dv, wp), RealInterval(Real(2L)), wp), wp);
      v = ci_add(ci_mul(z, u, wp), ComplexInterval::exact(Real(1L), Real(0L)), wp);
    }
    return std::make_pair(v, dv);
  };
  EvalFn ep = [k](const ComplexInterval& z, mpfr_prec_t wp) {
    ComplexInterval v = z;
    for (int i = 2; i <= k; ++i)
      v = ci_add(ci_mul(z, ci_sqr(v, wp), wp), ComplexInterval::exact(Real(1L), Real(0L)), wp);
    return v;
  };
  EvalFn edp = [joint](const ComplexInterval& z, mpfr_prec_t wp) { return joint(z, wp).second; };

  OraclePair pair;
  pair.p = make_oracle(d, RealInterval(Real(1L)), ep);
  pair.dp = make_oracle(d - 1, RealInterval(Real(static_cast<long>(d))), edp);
  pair.eval_both = [joint](const PointOracle& a, Precision L) {
    return eval_adaptive_pair(a, L, joint);
  };
  return pair;
}

long runnels_degree(int k) {
  if (k <= 0) return 0;
  long dm1 = 0, dm0 = 1;  // deg_0, deg_1
  for (int i = 1; i < k; ++i) {
    long next = std::max(2 * dm0, 1 + 4 * dm1);
    dm1 = dm0;
    dm0 = next;
  }
  return dm0;
}

OraclePair runnels_oracle(int k) {
  if (k < 0) throw std::invalid_argument("runnels_oracle: k >= 0 required");
  long d = runnels_degree(k);

  auto joint = [k](const ComplexInterval& z, mpfr_prec_t wp) {
    ComplexInterval one = ComplexInterval::exact(Real(1L), Real(0L));
    ComplexInterval zero = ComplexInterval::exact(Real(0L), Real(0L));
    if (k == 0) return std::make_pair(one, zero);
    ComplexInterval pv = one, pdv = zero;  // Run_{i-1}
    ComplexInterval cv = z, cdv = one;     // Run_i
    ComplexInterval two = ComplexInterval::exact(Real(2L), Real(0L));
    ComplexInterval four = ComplexInterval::exact(Real(4L), Real(0L));
    for (int i = 1; i < k; ++i) {
      ComplexInterval p2 = ci_sqr(pv, wp);
      ComplexInterval p3 = ci_mul(p2, pv, wp);
      ComplexInterval p4 = ci_mul(p3, pv, wp);
      ComplexInterval nv = ci_add(ci_sqr(cv, wp), ci_mul(z, p4, wp), wp);
      ComplexInterval ndv = ci_add(
          ci_mul(two, ci_mul(cv, cdv, wp), wp),
          ci_add(p4, ci_mul(four, ci_mul(z, ci_mul(p3, pdv, wp), wp), wp), wp), wp);
      pv = cv;
      pdv = cdv;
      cv = nv;
      cdv = ndv;
    }
    return std::make_pair(cv, cdv);
  };
  EvalFn ep = [joint](const ComplexInterval& z, mpfr_prec_t wp) { return joint(z, wp).first; };
  EvalFn edp = [joint](const ComplexInterval& z, mpfr_prec_t wp) { return joint(z, wp).second; };

  OraclePair pair;
  pair.p = make_oracle(d, RealInterval(Real(1L)), ep);
  pair.dp = make_oracle(std::max<long>(d - 1, 0),
                        RealInterval(Real(std::max<long>(d, 1))), edp);
  pair.eval_both = [joint](const PointOracle& a, Precision L) {
    return eval_adaptive_pair(a, L, joint);
  };
  return pair;
}

OraclePair mignotte_oracle(long d, long a) {
  if (d < 3) throw std::invalid_argument("mignotte_oracle: d >= 3 required");
  if (a < 2 || a % 2 != 0) throw std::invalid_argument("mignotte_oracle: a must be even and >= 2");
  // u = 2^(a/2 - 1)
  long ue = a / 2 - 1;

  auto joint = [d, ue](const ComplexInterval& z, mpfr_prec_t wp) {
    std::vector<ComplexInterval> sq;
    ComplexInterval zd1 = ci_pow(sq, z, d - 1, wp);
    ComplexInterval zd = ci_mul(zd1, z, wp);
    ComplexInterval u = ComplexInterval::exact(Real::pow2(ue), Real(0L));
    ComplexInterval w =
        ci_sub(ci_mul(u, z, wp), ComplexInterval::exact(Real(1L), Real(0L)), wp);  // u z - 1
    ComplexInterval val =
        ci_sub(zd, ci_scale_real(ci_sqr(w, wp), RealInterval(Real(2L)), wp), wp);
    ComplexInterval dval =
        ci_sub(ci_scale_real(zd1, RealInterval(Real(d)), wp),
               ci_scale_real(ci_mul(u, w, wp), RealInterval(Real(4L)), wp), wp);
    return std::make_pair(val, dval);
  };
  EvalFn ep = [joint](const ComplexInterval& z, mpfr_prec_t wp) { return joint(z, wp).first; };
  EvalFn edp = [joint](const ComplexInterval& z, mpfr_prec_t wp) { return joint(z, wp).second; };

  OraclePair pair;
  pair.p = make_oracle(d, RealInterval(Real(1L)), ep);
  pair.dp = make_oracle(d - 1, RealInterval(Real(d)), edp);
  pair.eval_both = [joint](const PointOracle& a_, Precision L) {
    return eval_adaptive_pair(a_, L, joint);
  };
  return pair;
}

OraclePair random_sparse_oracle(long d, long tau, long terms, unsigned long long seed) {
  if (terms < 2) throw std::invalid_argument("random_sparse_oracle: at least 2 terms");
  if (d < 1 || tau < 1) throw std::invalid_argument("random_sparse_oracle: d, tau >= 1");
  if (terms - 2 > d - 1) throw std::invalid_argument("random_sparse_oracle: too many terms");

  std::mt19937_64 rng(seed);
  mpz_class p0 = draw_coefficient(rng, tau);
  mpz_class pd = draw_coefficient(rng, tau);
  while (pd == 0) pd = draw_coefficient(rng, tau);
  std::set<long> idx;
  while (static_cast<long>(idx.size()) < terms - 2) idx.insert(draw_index(rng, 1, d - 1));
  std::map<long, mpz_class, std::greater<long>> coef;  // descending exponent
  coef[d] = pd;
  for (long i : idx) coef[i] = draw_coefficient(rng, tau);
  coef[0] = p0;

  auto body = std::make_shared<SparseBody>();
  for (auto& [e, c] : coef) body->terms.push_back({e, RationalComplex(mpq_class(c), 0)});
  body->dterms = SparseBody::derivative(body->terms);

  RealInterval lc = abs_enclosure(body->terms.front().coef);
  EvalFn ep = [body](const ComplexInterval& z, mpfr_prec_t wp) {
    return sparse_eval(body->terms, z, wp);
  };
  EvalFn edp = [body](const ComplexInterval& z, mpfr_prec_t wp) {
    return sparse_eval(body->dterms, z, wp);
  };

  RationalComplex dlc = body->dterms.empty() ? RationalComplex(0L) : body->dterms.front().coef;
  OraclePair pair;
  pair.p = make_oracle(d, lc, ep);
  pair.dp = make_oracle(std::max<long>(d - 1, 0), abs_enclosure(dlc), edp);
  pair.eval_both = [body](const PointOracle& a, Precision L) {
    return eval_adaptive_pair(a, L, [body](const ComplexInterval& z, mpfr_prec_t wp) {
      return std::make_pair(sparse_eval(body->terms, z, wp), sparse_eval(body->dterms, z, wp));
    });
  };
  return pair;
}

ComplexInterval ratio_eval(const OraclePair& o, const ComplexInterval& point, Precision L) {
  PointOracle a = [point](Precision) { return point; };
  auto [pv, dpv] = o.both(a, L);
  return ci_div(dpv, pv, static_cast<mpfr_prec_t>(L.bits() + 64));
}

}  // namespace croots
