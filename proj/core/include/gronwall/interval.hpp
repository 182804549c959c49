#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <string>

#include "gronwall/factored.hpp"

namespace gw {

using Precision = long;  // bits

// Escalation contract for deciding strict inequalities.
struct DecisionConfig {
  Precision start_precision = 128;
  Precision max_precision = 4096;
  unsigned escalation_factor = 2;

  void validate() const;  // start <= max, factor >= 2
  DecisionConfig doubled() const {
    DecisionConfig c = *this;
    c.start_precision = std::min(c.start_precision * 2, c.max_precision);
    return c;
  }
};

// A real number enclosed by directed-rounded bounds. `precision()` is the
// requested working precision; bounds internally carry kGuardBits extra bits
// so that composite evaluations stay within the width contract
// width <= 2^(1-precision) * |value|.
class PrecisionInterval {
 public:
  static constexpr Precision kGuardBits = 32;

  PrecisionInterval();  // point 0 at a minimal precision
  PrecisionInterval(const PrecisionInterval&);
  PrecisionInterval(PrecisionInterval&&) noexcept;
  PrecisionInterval& operator=(const PrecisionInterval&);
  PrecisionInterval& operator=(PrecisionInterval&&) noexcept;
  ~PrecisionInterval();

  static PrecisionInterval exact_zero(Precision precision);
  static PrecisionInterval from_integer(const mpz_class& v, Precision);
  static PrecisionInterval from_unsigned(std::uint64_t v, Precision);
  static PrecisionInterval from_rational(const mpq_class& q, Precision);

  Precision precision() const { return precision_; }
  double lower_double() const;    // rounded down
  double upper_double() const;    // rounded up
  double midpoint_double() const;
  double width_double() const;
  std::string midpoint_decimal(std::size_t digits) const;

  bool strictly_below(const PrecisionInterval& o) const;  // hi < o.lo
  bool is_positive() const;                               // lo > 0
  bool contains(double v) const;

  // Outward-rounded arithmetic, widened one ulp per side for composability.
  PrecisionInterval operator+(const PrecisionInterval& o) const;
  PrecisionInterval operator*(const PrecisionInterval& o) const;
  // Division requires a denominator interval strictly excluding zero.
  PrecisionInterval operator/(const PrecisionInterval& o) const;

  // Raw bounds (read-only) for code composing new operations.
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  explicit PrecisionInterval(Precision precision);  // uninitialized bounds
  void widen_ulp();

  mpfr_t lo_;
  mpfr_t hi_;
  Precision precision_;

  friend PrecisionInterval log_n(const FactoredInteger&, Precision);
  friend PrecisionInterval loglog_n(const FactoredInteger&, Precision);
  friend PrecisionInterval log_of_rational(const mpq_class&, Precision);
  friend PrecisionInterval pow_inverse_integer(const PrecisionInterval&,
                                               const mpz_class&);
  friend PrecisionInterval e_gamma(Precision);
  friend PrecisionInterval prime_log(std::size_t, Precision);
};

// Enclosure of ln n = sum a_i ln p_i. n = 1 gives the exact point [0, 0].
PrecisionInterval log_n(const FactoredInteger& n, Precision precision);

// Enclosure of ln ln n. DomainError for n in {1, 2}.
PrecisionInterval loglog_n(const FactoredInteger& n, Precision precision);

// Enclosure of ln q for an exact rational q > 0.
PrecisionInterval log_of_rational(const mpq_class& q, Precision precision);

// Enclosure of ln p_l (1-based index), served from the shared cache.
PrecisionInterval prime_log(std::size_t l, Precision precision);

// x^(1/S) = exp(ln x / S) with outward rounding; x must be strictly
// positive, S >= 1. S = 1 returns x unchanged.
PrecisionInterval pow_inverse_integer(const PrecisionInterval& x,
                                      const mpz_class& S);

// Enclosure of e^gamma (gamma: the Euler-Mascheroni constant).
PrecisionInterval e_gamma(Precision precision);

// Re-evaluates an enclosure at any requested precision.
using IntervalProducer = std::function<PrecisionInterval(Precision)>;

// True iff a < b for the enclosed true values. Escalates the working
// precision (start, x factor, ..., max) until the enclosures separate;
// returns false as soon as b <= a is proven. Throws Undecidable when the
// bounds still overlap at max precision (e.g. an exact tie).
bool decide_less(const IntervalProducer& a, const IntervalProducer& b,
                 const DecisionConfig& cfg);

}  // namespace gw
