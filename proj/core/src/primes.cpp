#include "gronwall/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "gronwall/errors.hpp"

namespace gw::primes {
namespace {

struct Table {
  std::shared_mutex mutex;
  std::vector<std::uint64_t> primes;
  std::vector<double> logs;
  std::uint64_t sieved_to = 0;
};

Table& table() {
  static Table t;
  return t;
}

// Grow the sieve to cover [0, limit]; caller holds the unique lock.
void sieve_to(Table& t, std::uint64_t limit) {
  if (limit <= t.sieved_to) return;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  t.primes.clear();
  t.logs.clear();
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      t.primes.push_back(i);
      t.logs.push_back(std::log(static_cast<double>(i)));
    }
  }
  t.sieved_to = limit;
}

void ensure_count_locked(Table& t, std::size_t count) {
  while (t.primes.size() < count) {
    // p_k < k (ln k + ln ln k) for k >= 6; doubling keeps regrowth rare.
    std::uint64_t next = t.sieved_to < 1024 ? 2048 : t.sieved_to * 2;
    sieve_to(t, next);
  }
}

}  // namespace

std::uint64_t nth(std::size_t i) {
  if (i == 0) throw DomainError("prime index is 1-based");
  Table& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (i <= t.primes.size()) return t.primes[i - 1];
  }
  std::unique_lock lock(t.mutex);
  ensure_count_locked(t, i);
  return t.primes[i - 1];
}

double log_nth(std::size_t i) {
  if (i == 0) throw DomainError("prime index is 1-based");
  Table& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (i <= t.logs.size()) return t.logs[i - 1];
  }
  std::unique_lock lock(t.mutex);
  ensure_count_locked(t, i);
  return t.logs[i - 1];
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  std::size_t i = 1;
  for (;;) {
    std::uint64_t p = nth(i++);
    if (p * p > v) return true;
    if (v % p == 0) return v == p;
  }
}

std::optional<std::size_t> index_of(std::uint64_t v) {
  constexpr std::uint64_t kMaxIndexedPrime = 1'000'000;
  if (v > kMaxIndexedPrime)
    throw ParseError("prime exceeds the supported table (10^6)");
  if (!is_prime(v)) return std::nullopt;
  Table& t = table();
  {
    std::unique_lock lock(t.mutex);
    if (t.sieved_to < v) sieve_to(t, std::max<std::uint64_t>(v, 2048));
  }
  std::shared_lock lock(t.mutex);
  auto it = std::lower_bound(t.primes.begin(), t.primes.end(), v);
  return static_cast<std::size_t>(it - t.primes.begin()) + 1;
}

void ensure_count(std::size_t count) {
  Table& t = table();
  std::unique_lock lock(t.mutex);
  ensure_count_locked(t, count);
}

}  // namespace gw::primes
