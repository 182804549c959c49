#include "gronwall/interval.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "gronwall/errors.hpp"
#include "gronwall/primes.hpp"

namespace gw {
namespace {

Precision internal_bits(Precision requested) {
  return requested + PrecisionInterval::kGuardBits;
}

// ---- shared cache of ln p_i enclosures, keyed by (index, internal bits) ----

struct CachedLog {
  mpfr_t lo;
  mpfr_t hi;
  CachedLog(std::size_t index, Precision bits) {
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
    std::uint64_t p = primes::nth(index);
    mpfr_set_ui(lo, p, MPFR_RNDD);
    mpfr_set_ui(hi, p, MPFR_RNDU);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_log(hi, hi, MPFR_RNDU);
  }
  ~CachedLog() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  CachedLog(const CachedLog&) = delete;
  CachedLog& operator=(const CachedLog&) = delete;
};

class PrimeLogCache {
 public:
  std::shared_ptr<const CachedLog> get(std::size_t index, Precision bits) {
    std::uint64_t key = pack(index, bits);
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto entry = std::make_shared<const CachedLog>(index, bits);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(entry));
    return it->second;
  }

 private:
  static std::uint64_t pack(std::size_t index, Precision bits) {
    return (static_cast<std::uint64_t>(bits) << 24) |
           static_cast<std::uint64_t>(index);
  }
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const CachedLog>> map_;
};

PrimeLogCache& prime_log_cache() {
  static PrimeLogCache cache;
  return cache;
}

}  // namespace

// ---- DecisionConfig ----

void DecisionConfig::validate() const {
  if (start_precision < 8 || start_precision > max_precision)
    throw std::invalid_argument("precision range must satisfy 8 <= start <= max");
  if (escalation_factor < 2)
    throw std::invalid_argument("escalation factor must be >= 2");
}

// ---- PrecisionInterval ----

PrecisionInterval::PrecisionInterval(Precision precision)
    : precision_(precision) {
  mpfr_init2(lo_, internal_bits(precision));
  mpfr_init2(hi_, internal_bits(precision));
}

PrecisionInterval::PrecisionInterval() : PrecisionInterval(Precision{16}) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

PrecisionInterval::PrecisionInterval(const PrecisionInterval& o)
    : PrecisionInterval(o.precision_) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

PrecisionInterval::PrecisionInterval(PrecisionInterval&& o) noexcept
    : precision_(o.precision_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

PrecisionInterval& PrecisionInterval::operator=(const PrecisionInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, internal_bits(o.precision_));
    mpfr_set_prec(hi_, internal_bits(o.precision_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    precision_ = o.precision_;
  }
  return *this;
}

PrecisionInterval& PrecisionInterval::operator=(
    PrecisionInterval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(precision_, o.precision_);
  return *this;
}

PrecisionInterval::~PrecisionInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void PrecisionInterval::widen_ulp() {
  mpfr_nextbelow(lo_);
  mpfr_nextabove(hi_);
}

PrecisionInterval PrecisionInterval::exact_zero(Precision precision) {
  PrecisionInterval r(precision);
  mpfr_set_zero(r.lo_, 1);
  mpfr_set_zero(r.hi_, 1);
  return r;
}

PrecisionInterval PrecisionInterval::from_integer(const mpz_class& v,
                                                  Precision precision) {
  PrecisionInterval r(precision);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

PrecisionInterval PrecisionInterval::from_unsigned(std::uint64_t v,
                                                   Precision precision) {
  PrecisionInterval r(precision);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

PrecisionInterval PrecisionInterval::from_rational(const mpq_class& q,
                                                   Precision precision) {
  PrecisionInterval r(precision);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

double PrecisionInterval::lower_double() const {
  return mpfr_get_d(lo_, MPFR_RNDD);
}

double PrecisionInterval::upper_double() const {
  return mpfr_get_d(hi_, MPFR_RNDU);
}

double PrecisionInterval::midpoint_double() const {
  return 0.5 * (lower_double() + upper_double());
}

double PrecisionInterval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double r = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return r;
}

std::string PrecisionInterval::midpoint_decimal(std::size_t digits) const {
  mpfr_t mid;
  mpfr_init2(mid, internal_bits(precision_));
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  char format[32];
  std::snprintf(format, sizeof format, "%%.%zuRNf", digits);
  char* text = nullptr;
  mpfr_asprintf(&text, format, mid);
  std::string out(text);
  mpfr_free_str(text);
  mpfr_clear(mid);
  return out;
}

bool PrecisionInterval::strictly_below(const PrecisionInterval& o) const {
  return mpfr_less_p(hi_, o.lo_) != 0;
}

bool PrecisionInterval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool PrecisionInterval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

PrecisionInterval PrecisionInterval::operator+(
    const PrecisionInterval& o) const {
  PrecisionInterval r(std::min(precision_, o.precision_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  r.widen_ulp();
  return r;
}

PrecisionInterval PrecisionInterval::operator*(
    const PrecisionInterval& o) const {
  PrecisionInterval r(std::min(precision_, o.precision_));
  mpfr_t t;
  mpfr_init2(t, internal_bits(r.precision_));
  // Lower bound: minimum of the four directed products.
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // Upper bound: maximum of the four directed products.
  mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  r.widen_ulp();
  return r;
}

PrecisionInterval PrecisionInterval::operator/(
    const PrecisionInterval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw DomainError("interval division by an enclosure containing zero");
  PrecisionInterval r(std::min(precision_, o.precision_));
  mpfr_t t;
  mpfr_init2(t, internal_bits(r.precision_));
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, hi_, o.hi_, MPFR_RNDU);
  mpfr_div(t, lo_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  r.widen_ulp();
  return r;
}

// ---- transcendental enclosures ----

PrecisionInterval prime_log(std::size_t l, Precision precision) {
  if (l == 0) throw DomainError("prime index is 1-based");
  auto cached = prime_log_cache().get(l, internal_bits(precision));
  PrecisionInterval r(precision);
  mpfr_set(r.lo_, cached->lo, MPFR_RNDD);
  mpfr_set(r.hi_, cached->hi, MPFR_RNDU);
  return r;
}

PrecisionInterval log_n(const FactoredInteger& n, Precision precision) {
  PrecisionInterval r = PrecisionInterval::exact_zero(precision);
  const auto& exps = n.exponents();
  mpfr_t term;
  mpfr_init2(term, internal_bits(precision));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    auto cached = prime_log_cache().get(i + 1, internal_bits(precision));
    mpfr_mul_ui(term, cached->lo, exps[i], MPFR_RNDD);
    mpfr_add(r.lo_, r.lo_, term, MPFR_RNDD);
    mpfr_mul_ui(term, cached->hi, exps[i], MPFR_RNDU);
    mpfr_add(r.hi_, r.hi_, term, MPFR_RNDU);
  }
  mpfr_clear(term);
  return r;
}

PrecisionInterval loglog_n(const FactoredInteger& n, Precision precision) {
  if (n.is_one() || n.is_two())
    throw DomainError("ln ln n requires n >= 3");
  PrecisionInterval x = log_n(n, precision);
  PrecisionInterval r(precision);
  mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
  return r;
}

PrecisionInterval log_of_rational(const mpq_class& q, Precision precision) {
  if (sgn(q) <= 0) throw DomainError("logarithm of a non-positive rational");
  PrecisionInterval x = PrecisionInterval::from_rational(q, precision);
  PrecisionInterval r(precision);
  mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
  return r;
}

PrecisionInterval pow_inverse_integer(const PrecisionInterval& x,
                                      const mpz_class& S) {
  if (S < 1) throw DomainError("root order must be >= 1");
  if (!x.is_positive())
    throw DomainError("enclosure may be non-positive; root undefined");
  if (S == 1) return x;
  PrecisionInterval r(x.precision());
  // exp(ln x / S), monotone in x, so the bounds map endpoint to endpoint.
  mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
  mpfr_div_z(r.lo_, r.lo_, S.get_mpz_t(), MPFR_RNDD);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
  mpfr_div_z(r.hi_, r.hi_, S.get_mpz_t(), MPFR_RNDU);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

PrecisionInterval e_gamma(Precision precision) {
  PrecisionInterval r(precision);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

// ---- adaptive decision ----

bool decide_less(const IntervalProducer& a, const IntervalProducer& b,
                 const DecisionConfig& cfg) {
  cfg.validate();
  Precision precision = cfg.start_precision;
  for (;;) {
    PrecisionInterval ia = a(precision);
    PrecisionInterval ib = b(precision);
    if (ia.strictly_below(ib)) return true;
    // b <= a proven: "a < b" is false (covers the equality case).
    if (mpfr_lessequal_p(ib.hi(), ia.lo())) return false;
    if (precision >= cfg.max_precision)
      throw Undecidable("enclosures still overlap at max precision", precision);
    precision = std::min<Precision>(precision * cfg.escalation_factor,
                                    cfg.max_precision);
  }
}

}  // namespace gw
