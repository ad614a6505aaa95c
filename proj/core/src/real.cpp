#include "croots/real.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace {

// GMP/MPFR allocation runs hot (every temporary is a fresh limb buffer), so
// route it through a thread-local free list of 8-byte-granular buckets.
// Allocations are made at full bucket capacity, so recycled blocks always fit
// same-bucket requests; blocks above the cutoff fall through to malloc.
constexpr size_t kPoolCutoff = 2048;
constexpr size_t kBuckets = kPoolCutoff / 8 + 1;
constexpr int kSlotsPerBucket = 64;

struct FreeLists {
  void* slot[kBuckets][kSlotsPerBucket];
  int count[kBuckets] = {};
  ~FreeLists() {
    for (size_t b = 0; b < kBuckets; ++b)
      for (int i = 0; i < count[b]; ++i) std::free(slot[b][i]);
  }
};

thread_local FreeLists t_lists;

void* pool_alloc(size_t n) {
  if (n <= kPoolCutoff) {
    size_t b = (n + 7) / 8;
    if (t_lists.count[b] > 0) return t_lists.slot[b][--t_lists.count[b]];
    return std::malloc(b * 8);
  }
  return std::malloc(n);
}

void pool_free(void* p, size_t n) {
  if (p == nullptr) return;
  if (n <= kPoolCutoff) {
    size_t b = (n + 7) / 8;
    if (t_lists.count[b] < kSlotsPerBucket) {
      t_lists.slot[b][t_lists.count[b]++] = p;
      return;
    }
  }
  std::free(p);
}

void* pool_realloc(void* p, size_t old_n, size_t new_n) {
  if (old_n <= kPoolCutoff && (old_n + 7) / 8 == (new_n + 7) / 8) return p;
  void* q = pool_alloc(new_n);
  std::memcpy(q, p, old_n < new_n ? old_n : new_n);
  pool_free(p, old_n);
  return q;
}

__attribute__((constructor)) void install_pool() {
  mp_set_memory_functions(pool_alloc, pool_realloc, pool_free);
}

}  // namespace

namespace croots {

mpq_class Real::to_rational() const {
  if (!is_finite()) throw std::invalid_argument("Real::to_rational on non-finite value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Real::exact_decimal() const {
  if (!is_finite()) return is_inf() ? (sign() > 0 ? "inf" : "-inf") : "nan";
  if (is_zero()) return "0";
  // v = m * 2^e with m odd after normalization
  mpz_class m;
  mpfr_exp_t e2 = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  long e = static_cast<long>(e2);
  // strip factors of two into the exponent
  while (m % 2 == 0) {
    m /= 2;
    ++e;
  }
  bool neg = m < 0;
  if (neg) m = -m;
  std::string out = neg ? "-" : "";
  if (e >= 0) {
    mpz_class ip = m << e;
    out += ip.get_str();
    return out;
  }
  // m / 2^k == m * 5^k / 10^k : exact decimal with k fractional digits
  unsigned long k = static_cast<unsigned long>(-e);
  mpz_class five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
  mpz_class digits = m * five;
  std::string ds = digits.get_str();
  if (ds.size() <= k) ds.insert(0, k + 1 - ds.size(), '0');
  std::string ip = ds.substr(0, ds.size() - k);
  std::string fp = ds.substr(ds.size() - k);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  out += ip;
  if (!fp.empty()) out += "." + fp;
  return out;
}

Real Real::from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  if (s == "inf") return Real::inf();
  if (s == "-inf") {
    Real r = Real::inf();
    mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
    return r;
  }
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string ip, fp;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) ip += s[i];
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) fp += s[i];
  }
  if (i != s.size() || (ip.empty() && fp.empty()))
    throw std::invalid_argument("malformed decimal string: " + s);
  mpz_class num(ip.empty() ? "0" : ip);
  mpz_class den = 1;
  if (!fp.empty()) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    num = num * scale + mpz_class(fp);
    den = scale;
  }
  if (neg) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  // denominator must be a power of two for an exact dyadic parse
  mpz_class d = q.get_den();
  if (mpz_scan1(d.get_mpz_t(), 0) != mpz_sizeinbase(d.get_mpz_t(), 2) - 1)
    throw std::invalid_argument("decimal is not a dyadic rational: " + s);
  size_t nbits = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(nbits < 2 ? 2 : nbits);
  return from_rational(q, prec, MPFR_RNDN);
}

Real Real::from_rational(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r = Real::zero(prec);
  mpfr_set_q(r.raw(), q.get_mpq_t(), rnd);
  return r;
}

}  // namespace croots
