#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>
#include <gronwall/criteria.hpp>
#include <gronwall/errors.hpp>

#include "../support/oracle.hpp"

using namespace gw;

TEST_SUITE("oracle") {

TEST_CASE("sigma_naive") {
  CHECK(oracle::sigma_naive(1) == 1);
  CHECK(oracle::sigma_naive(6) == 12);  // perfect
  CHECK(oracle::sigma_naive(36) == 91);
  // 19344 doubles as the product formula 31 * 13 * 6 * 8.
  CHECK(oracle::sigma_naive(5040) == 19344);
  CHECK(oracle::sigma_naive(5040) == 31ull * 13 * 6 * 8);
  CHECK(oracle::sigma_naive(10080) == 39312);
  CHECK_THROWS_AS(oracle::sigma_naive(0), DomainError);
  CHECK_THROWS_AS(oracle::sigma_naive(10'000'001), DomainError);
}

TEST_CASE("sa_scan_naive") {
  CHECK(oracle::sa_scan_naive(12) ==
        std::vector<std::uint64_t>({1, 2, 4, 6, 12}));
  CHECK(oracle::sa_scan_naive(1) == std::vector<std::uint64_t>({1}));
  auto to_10080 = oracle::sa_scan_naive(10080);
  CHECK(to_10080.size() == 20);
  CHECK(to_10080.back() == 10080);
  CHECK_THROWS_AS(oracle::sa_scan_naive(0), DomainError);
  CHECK_THROWS_AS(oracle::sa_scan_naive(1'000'001), DomainError);
}

TEST_CASE("g_naive") {
  CHECK(oracle::g_naive(5040) == doctest::Approx(1.790973).epsilon(1e-5));
  CHECK(oracle::g_naive(3) == doctest::Approx(14.177184).epsilon(1e-5));
  CHECK(oracle::g_naive(10) ==
        doctest::Approx(18.0 / (10.0 * std::log(std::log(10.0))))
            .epsilon(1e-12));
  CHECK_THROWS_AS(oracle::g_naive(2), DomainError);
  CHECK_THROWS_AS(oracle::g_naive(10'000'001), DomainError);
}

TEST_CASE("factor_u64 round-trips") {
  CHECK(oracle::factor_u64(1).empty());
  CHECK(oracle::factor_u64(5040) ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>(
            {{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
  CHECK(oracle::factor_u64(999983) ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>({{999983, 1}}));
  CHECK(oracle::factored_from_u64(1).is_one());
  CHECK(oracle::factored_from_u64(720720).value() == 720720);
}

TEST_CASE("sigma agreement on random values up to 10^6") {
  std::mt19937_64 rng(9401);
  std::uniform_int_distribution<std::uint64_t> vd(1, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = vd(rng);
    auto n = oracle::factored_from_u64(v);
    CHECK(n.sigma().get_ui() == oracle::sigma_naive(v));
  }
}

TEST_CASE("g_naive intersects the rigorous enclosure") {
  for (std::uint64_t v : {3ull, 4ull, 7ull, 100ull, 5040ull, 10080ull,
                          55440ull, 720720ull}) {
    auto n = oracle::factored_from_u64(v);
    auto iv = g_value(n, 128);
    // Relative tolerance 1e-9: far above the double evaluation's error,
    // far below any plausible library bug.
    CHECK(std::abs(oracle::g_naive(v) - iv.midpoint_double()) <=
          1e-9 * iv.midpoint_double());
  }
  std::mt19937_64 rng(9402);
  std::uniform_int_distribution<std::uint64_t> vd(3, 1'000'000);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t v = vd(rng);
    auto iv = g_value(oracle::factored_from_u64(v), 128);
    CHECK(std::abs(oracle::g_naive(v) - iv.midpoint_double()) <=
          1e-9 * std::abs(iv.midpoint_double()));
  }
}

}  // TEST_SUITE
