#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "gronwall/factored.hpp"
#include "gronwall/interval.hpp"

namespace gw {

// Encloses G(n) = sigma(n) / (n ln ln n). Requires n >= 3 (DomainError
// otherwise): below that ln ln n is non-positive or undefined.
PrecisionInterval g_value(const FactoredInteger& n, Precision precision);

// The same G(n) as a re-evaluatable producer for decide_less, with the
// exact sigma(n)/n hoisted out of the per-precision closure.
IntervalProducer g_producer(const FactoredInteger& n);

enum class RobinVerdict { Below, Above };

// Decides G(n) < e^gamma (Below) or G(n) > e^gamma (Above). n >= 3.
RobinVerdict robin_compare(const FactoredInteger& n, const DecisionConfig& cfg);

// Sum_{alpha = 1 .. a+1} p^alpha, exactly. p = 1 degenerates to a + 1.
mpz_class geometric_sum(std::uint64_t p, std::uint64_t a);

// True iff p_l^{a_l + 1} < ln n, with the left side exact. Requires n >= 2.
bool power_condition(const FactoredInteger& n, std::size_t l,
                     const DecisionConfig& cfg);

// True iff (ln n)^{1/S} > 1 + ln p_l / ln n where S = geometric_sum(p_l, a_l).
// Requires n >= 3. Equivalent to g_increases on the whole domain.
bool root_criterion(const FactoredInteger& n, std::size_t l,
                    const DecisionConfig& cfg);

// True iff G(n p_l) > G(n). Requires n >= 3.
bool g_increases(const FactoredInteger& n, std::size_t l,
                 const DecisionConfig& cfg);

// Encloses the ratio G(n p_l) / G(n) through its closed form
//   (p^{a+2} - 1) / (p^{a+2} - p) * ln ln n / ln ln(n p_l),   p = p_l, a = a_l.
// Always intersects the direct quotient g_value(n p_l) / g_value(n).
PrecisionInterval g_ratio(const FactoredInteger& n, std::size_t l,
                          Precision precision);

// True iff xi^{1/T} > 1 + ln t / xi with T = sum_{alpha = 1 .. s} t^alpha.
// Requires t >= 1, s >= 1, xi > 0. Holds whenever xi > t^s.
bool root_inequality(std::uint64_t t, std::uint64_t s, const mpq_class& xi,
                     const DecisionConfig& cfg);

// The three verdicts for one (n, l) pair. Invariants on the full domain:
// condition implies increases; criterion equals increases.
struct GronwallVerdict {
  FactoredInteger subject;
  std::size_t prime_index = 0;
  bool condition = false;  // p_l^{a_l+1} < ln n
  bool criterion = false;  // (ln n)^{1/S} > 1 + ln p_l / ln n
  bool increases = false;  // G(n p_l) > G(n)
};

// Evaluates all three statements for (n, l). Requires n >= 3, l >= 1.
GronwallVerdict check_all(const FactoredInteger& n, std::size_t l,
                          const DecisionConfig& cfg);

}  // namespace gw
