#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace gw::primes {

// i-th prime, 1-based: nth(1) = 2, nth(2) = 3, ... Extends the sieve on
// demand; any index reachable by memory is supported (well beyond 10^4).
std::uint64_t nth(std::size_t i);

// Natural log of the i-th prime as a double (cached alongside the sieve).
double log_nth(std::size_t i);

// Deterministic primality check by trial division against sieved primes.
bool is_prime(std::uint64_t v);

// 1-based index of v in the prime sequence, or nullopt if v is composite.
// Supported for v <= 10^6 (larger values raise ParseError: exponent vectors
// indexed past that point are not useful here).
std::optional<std::size_t> index_of(std::uint64_t v);

// Pre-extend the table to at least `count` primes (optional warm-up).
void ensure_count(std::size_t count);

}  // namespace gw::primes
