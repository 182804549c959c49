#include "gronwall/criteria.hpp"

#include "gronwall/errors.hpp"
#include "gronwall/primes.hpp"

namespace gw {
namespace {

void require_at_least_3(const FactoredInteger& n) {
  if (n.is_one() || n.is_two())
    throw DomainError("G(n) and its criteria require n >= 3");
}

}  // namespace

IntervalProducer g_producer(const FactoredInteger& n) {
  require_at_least_3(n);
  mpq_class abundancy = n.sigma_over_n();
  return [n, abundancy](Precision p) {
    return PrecisionInterval::from_rational(abundancy, p) / loglog_n(n, p);
  };
}

PrecisionInterval g_value(const FactoredInteger& n, Precision precision) {
  require_at_least_3(n);
  return PrecisionInterval::from_rational(n.sigma_over_n(), precision) /
         loglog_n(n, precision);
}

RobinVerdict robin_compare(const FactoredInteger& n,
                           const DecisionConfig& cfg) {
  bool below = decide_less(g_producer(n),
                           [](Precision p) { return e_gamma(p); }, cfg);
  return below ? RobinVerdict::Below : RobinVerdict::Above;
}

mpz_class geometric_sum(std::uint64_t p, std::uint64_t a) {
  mpz_class sum = 0;
  mpz_class power = 1;
  for (std::uint64_t alpha = 0; alpha <= a; ++alpha) {
    power *= p;
    sum += power;
  }
  return sum;
}

bool power_condition(const FactoredInteger& n, std::size_t l,
                     const DecisionConfig& cfg) {
  if (n.is_one()) throw DomainError("the power condition requires n >= 2");
  if (l == 0) throw DomainError("prime index is 1-based");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), primes::nth(l), n.exponent(l) + 1);
  return decide_less(
      [power](Precision p) { return PrecisionInterval::from_integer(power, p); },
      [n](Precision p) { return log_n(n, p); }, cfg);
}

bool root_criterion(const FactoredInteger& n, std::size_t l,
                    const DecisionConfig& cfg) {
  require_at_least_3(n);
  if (l == 0) throw DomainError("prime index is 1-based");
  mpz_class S = geometric_sum(primes::nth(l), n.exponent(l));
  auto lhs = [n, S](Precision p) {
    return pow_inverse_integer(log_n(n, p), S);
  };
  auto rhs = [n, l](Precision p) {
    return PrecisionInterval::from_unsigned(1, p) +
           prime_log(l, p) / log_n(n, p);
  };
  return decide_less(rhs, lhs, cfg);
}

bool g_increases(const FactoredInteger& n, std::size_t l,
                 const DecisionConfig& cfg) {
  require_at_least_3(n);
  if (l == 0) throw DomainError("prime index is 1-based");
  return decide_less(g_producer(n), g_producer(n.multiply_prime(l)), cfg);
}

PrecisionInterval g_ratio(const FactoredInteger& n, std::size_t l,
                          Precision precision) {
  require_at_least_3(n);
  if (l == 0) throw DomainError("prime index is 1-based");
  mpz_class top;  // p^{a+2}
  mpz_ui_pow_ui(top.get_mpz_t(), primes::nth(l), n.exponent(l) + 2);
  mpq_class factor(top - 1, top - primes::nth(l));
  factor.canonicalize();
  return PrecisionInterval::from_rational(factor, precision) *
         (loglog_n(n, precision) / loglog_n(n.multiply_prime(l), precision));
}

bool root_inequality(std::uint64_t t, std::uint64_t s, const mpq_class& xi,
                     const DecisionConfig& cfg) {
  if (t < 1 || s < 1) throw DomainError("t and s must be positive integers");
  if (sgn(xi) <= 0) throw DomainError("xi must be positive");
  mpz_class T = geometric_sum(t, s - 1);
  auto lhs = [xi, T](Precision p) {
    return pow_inverse_integer(PrecisionInterval::from_rational(xi, p), T);
  };
  auto rhs = [t, xi](Precision p) {
    if (t == 1) return PrecisionInterval::from_unsigned(1, p);
    return PrecisionInterval::from_unsigned(1, p) +
           log_of_rational(mpq_class(t), p) /
               PrecisionInterval::from_rational(xi, p);
  };
  return decide_less(rhs, lhs, cfg);
}

GronwallVerdict check_all(const FactoredInteger& n, std::size_t l,
                          const DecisionConfig& cfg) {
  require_at_least_3(n);
  GronwallVerdict v;
  v.subject = n;
  v.prime_index = l;
  v.condition = power_condition(n, l, cfg);
  v.criterion = root_criterion(n, l, cfg);
  v.increases = g_increases(n, l, cfg);
  return v;
}

}  // namespace gw
