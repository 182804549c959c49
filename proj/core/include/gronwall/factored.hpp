#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gw {

enum class FormatStyle {
  Exact,     // every factor spelled out: "2^5*3^2*5*7"
  Ellipsis,  // trailing run of exponent-1 primes contracted: "2^8*...*103"
};

// A positive integer as its exponent vector over the initial primes:
// exponents()[i] is the power of the (i+1)-th prime. The empty vector is 1.
// Immutable value type; every operation returns a new instance.
class FactoredInteger {
 public:
  FactoredInteger() = default;  // n = 1
  explicit FactoredInteger(std::vector<std::uint32_t> exponents);

  // Grammar: <prime>[^<exp>] ('*' <prime>[^<exp>])* with strictly increasing
  // prime bases and exponents >= 1, or the literal "1". Throws ParseError.
  static FactoredInteger parse(std::string_view text);

  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::size_t k() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }
  bool is_two() const { return exps_.size() == 1 && exps_[0] == 1; }

  // Exponent of the l-th prime (1-based); 0 beyond the tracked range.
  std::uint32_t exponent(std::size_t l) const;

  // Omega: number of prime factors counted with multiplicity.
  std::uint64_t big_omega() const;

  // True when a_1 >= a_2 >= ... >= a_k >= 1 (no interior zeros).
  bool is_nonincreasing() const;

  // n * p_l for 1-based l (l may exceed k).
  FactoredInteger multiply_prime(std::size_t l) const;

  // Smallest prime (value / 1-based index) with exponent zero.
  std::uint64_t least_missing_prime() const;
  std::size_t least_missing_index() const;

  // Exponent multiset sorted non-increasingly onto the initial primes.
  // Never decreases sigma(n)/n, never increases the integer value.
  FactoredInteger canonical_rearrange() const;

  mpz_class value() const;
  mpz_class sigma() const;
  mpq_class sigma_over_n() const;  // reduced

  // Sum of a_i * ln p_i in double precision. Accumulated relative error is
  // far below 1e-10 for any input this library handles; rigorous callers
  // combine it with compare_value or the interval engine.
  double log_double() const;

  std::string format(FormatStyle style = FormatStyle::Exact) const;

  bool operator==(const FactoredInteger&) const = default;

  // Exact value ordering: double-log filter with a 1e-9 window, exact
  // big-integer comparison inside the window.
  std::strong_ordering compare_value(const FactoredInteger& other) const;

 private:
  std::vector<std::uint32_t> exps_;
};

}  // namespace gw
