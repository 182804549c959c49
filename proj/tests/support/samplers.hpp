#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gronwall/factored.hpp>
#include <gronwall/primes.hpp>

// Deterministic random input generators for property tests. Every test
// fixes its own mt19937_64 seed so failures reproduce exactly.
namespace samplers {

// Non-increasing exponent vector with ln n <= max_log (rejection sampled).
// Never returns 1: the result has at least one prime factor.
inline gw::FactoredInteger random_nonincreasing(std::mt19937_64& rng,
                                                double max_log,
                                                std::size_t max_primes = 20) {
  std::uniform_int_distribution<std::size_t> kd(1, max_primes);
  std::geometric_distribution<std::uint32_t> extra(0.6);
  for (;;) {
    const std::size_t k = kd(rng);
    std::vector<std::uint32_t> exps(k);
    std::uint32_t cur = 1 + extra(rng);  // a_k >= 1
    for (std::size_t i = k; i-- > 0;) {
      exps[i] = cur;
      if (i > 0) cur += extra(rng);  // keep a_1 >= ... >= a_k
    }
    double lg = 0;
    for (std::size_t i = 0; i < k; ++i)
      lg += exps[i] * gw::primes::log_nth(i + 1);
    if (lg <= max_log) return gw::FactoredInteger{std::move(exps)};
  }
}

// Arbitrary exponent pattern (interior zeros allowed, order unconstrained)
// with ln n <= max_log. May be 1.
inline gw::FactoredInteger random_any_pattern(std::mt19937_64& rng,
                                              double max_log,
                                              std::size_t max_primes = 15) {
  std::uniform_int_distribution<std::size_t> kd(1, max_primes);
  std::uniform_int_distribution<int> coin(0, 2);
  std::geometric_distribution<std::uint32_t> extra(0.5);
  for (;;) {
    const std::size_t k = kd(rng);
    std::vector<std::uint32_t> exps(k);
    for (std::size_t i = 0; i < k; ++i)
      exps[i] = coin(rng) == 0 ? 0 : 1 + extra(rng);
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    double lg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
      lg += exps[i] * gw::primes::log_nth(i + 1);
    if (lg <= max_log) return gw::FactoredInteger{std::move(exps)};
  }
}

}  // namespace samplers
