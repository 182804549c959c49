#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>
#include <gronwall/criteria.hpp>
#include <gronwall/errors.hpp>
#include <gronwall/sa.hpp>

#include "../support/samplers.hpp"

using namespace gw;

namespace {

// First `count` superabundant numbers with n >= 3.
std::vector<FactoredInteger> sa_corpus(std::size_t count) {
  auto list = sa_list(110.0);  // 300+ records with margin
  std::vector<FactoredInteger> out;
  for (const auto& rec : list.records) {
    if (rec.n.is_one() || rec.n.is_two()) continue;
    out.push_back(rec.n);
    if (out.size() == count) break;
  }
  REQUIRE(out.size() == count);
  return out;
}

bool intervals_intersect(const PrecisionInterval& a,
                         const PrecisionInterval& b) {
  return mpfr_lessequal_p(a.lo(), b.hi()) && mpfr_lessequal_p(b.lo(), a.hi());
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("g_value matches frozen references") {
  auto g = [](const char* text) {
    return g_value(FactoredInteger::parse(text), 128).midpoint_double();
  };
  CHECK(g("3") == doctest::Approx(14.177183749181978049).epsilon(1e-14));
  CHECK(g("2*3") == doctest::Approx(3.429366566700587167).epsilon(1e-14));
  CHECK(g("2^4*3^2*5*7") ==
        doctest::Approx(1.790973366534881133).epsilon(1e-14));
  CHECK(g("2^5*3^2*5*7") ==
        doctest::Approx(1.755814338925296748).epsilon(1e-14));
  CHECK(g("2^4*3^2*5*7*11") ==
        doctest::Approx(1.751246514887494247).epsilon(1e-14));
}

TEST_CASE("g_value domain stops below 3") {
  CHECK_THROWS_AS(g_value(FactoredInteger::parse("1"), 64), DomainError);
  CHECK_THROWS_AS(g_value(FactoredInteger::parse("2"), 64), DomainError);
  CHECK_NOTHROW(g_value(FactoredInteger::parse("3"), 64));
}

TEST_CASE("robin comparison at and beyond 5040") {
  DecisionConfig cfg;
  CHECK(robin_compare(FactoredInteger::parse("2^4*3^2*5*7"), cfg) ==
        RobinVerdict::Above);
  CHECK(robin_compare(FactoredInteger::parse("2^5*3^2*5*7"), cfg) ==
        RobinVerdict::Below);
  CHECK(robin_compare(FactoredInteger::parse("3"), cfg) == RobinVerdict::Above);
}

TEST_CASE("geometric_sum") {
  CHECK(geometric_sum(2, 0) == 2);
  CHECK(geometric_sum(3, 1) == 12);
  CHECK(geometric_sum(11, 0) == 11);
  CHECK(geometric_sum(2, 2) == 14);
  CHECK(geometric_sum(5, 3) == 5 + 25 + 125 + 625);
}

TEST_CASE("power_condition examples") {
  DecisionConfig cfg;
  auto n5040 = FactoredInteger::parse("2^4*3^2*5*7");
  // p_l^(a_l + 1) vs ln 5040 ~ 8.525: 32, 27, 25, 49, 11, 13 all exceed it.
  for (std::size_t l = 1; l <= 6; ++l) CHECK_FALSE(power_condition(n5040, l, cfg));

  // Omega = 14 maximizer: p_8 = 19 < ln n ~ 19.72 with a_8 = 0.
  FactoredInteger w14{std::vector<std::uint32_t>{5, 3, 2, 1, 1, 1, 1}};
  CHECK(power_condition(w14, 8, cfg));
  CHECK_FALSE(power_condition(w14, 1, cfg));  // 2^6 = 64 > 19.72

  CHECK_THROWS_AS(power_condition(FactoredInteger::parse("1"), 1, cfg),
                  DomainError);
  CHECK_THROWS_AS(power_condition(n5040, 0, cfg), DomainError);
  CHECK_NOTHROW(power_condition(FactoredInteger::parse("2"), 1, cfg));
}

TEST_CASE("root_criterion examples") {
  DecisionConfig cfg;
  // n = 3, l = 1: sqrt(ln 3) ~ 1.048 < 1 + ln2/ln3 ~ 1.631.
  CHECK_FALSE(root_criterion(FactoredInteger::parse("3"), 1, cfg));
  CHECK_FALSE(root_criterion(FactoredInteger::parse("2^4*3^2*5*7"), 5, cfg));
  FactoredInteger w14{std::vector<std::uint32_t>{5, 3, 2, 1, 1, 1, 1}};
  CHECK(root_criterion(w14, 8, cfg));
  CHECK_THROWS_AS(root_criterion(FactoredInteger::parse("2"), 1, cfg),
                  DomainError);
}

TEST_CASE("g_increases examples") {
  DecisionConfig cfg;
  CHECK_FALSE(g_increases(FactoredInteger::parse("3"), 1, cfg));
  CHECK_FALSE(g_increases(FactoredInteger::parse("2^4*3^2*5*7"), 5, cfg));
  FactoredInteger w14{std::vector<std::uint32_t>{5, 3, 2, 1, 1, 1, 1}};
  CHECK(g_increases(w14, 8, cfg));
}

TEST_CASE("closed-form ratio") {
  auto n5040 = FactoredInteger::parse("2^4*3^2*5*7");
  CHECK(g_ratio(n5040, 5, 128).midpoint_double() ==
        doctest::Approx(0.977818290104308392).epsilon(1e-14));
}

TEST_CASE("closed-form ratio intersects the direct quotient") {
  DecisionConfig cfg;
  std::mt19937_64 rng(9101);
  std::uniform_int_distribution<std::size_t> ld(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    auto n = samplers::random_nonincreasing(rng, 50.0);
    if (n.is_two()) continue;
    std::size_t l = ld(rng);
    auto ratio = g_ratio(n, l, 128);
    auto direct = g_value(n.multiply_prime(l), 128) / g_value(n, 128);
    CHECK(intervals_intersect(ratio, direct));
  }
}

TEST_CASE("root_inequality examples") {
  DecisionConfig cfg;
  // t=2, s=1, xi=3: sqrt(3) ~ 1.732 against 1 + ln2/3 ~ 1.231.
  CHECK(root_inequality(2, 1, mpq_class(3), cfg));
  // t = 1 degenerates to xi^(1/s) > 1, true for xi > 1.
  CHECK(root_inequality(1, 3, mpq_class(2), cfg));
}

TEST_CASE("root_inequality property harness, 10^4 samples") {
  DecisionConfig cfg;
  std::mt19937_64 rng(20150406);
  std::uniform_int_distribution<std::uint64_t> td(1, 10), sd(1, 5);
  std::uniform_int_distribution<std::uint64_t> dend(1, 1000);
  int violations = 0;
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t t = td(rng), s = sd(rng);
    mpz_class ts;
    mpz_ui_pow_ui(ts.get_mpz_t(), static_cast<unsigned long>(t),
                  static_cast<unsigned long>(s));
    const std::uint64_t den = dend(rng);
    std::uniform_int_distribution<std::uint64_t> numd(den + 1, 10 * den);
    // xi = t^s * num/den with num/den in (1, 10]: xi in (t^s, 10 t^s].
    mpq_class xi(mpz_class(ts * numd(rng)), mpz_class(den));
    xi.canonicalize();
    if (!root_inequality(t, s, xi, cfg)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("verdict bundle is consistent with the parts") {
  DecisionConfig cfg;
  auto n5040 = FactoredInteger::parse("2^4*3^2*5*7");
  auto v = check_all(n5040, 5, cfg);
  CHECK(v.subject == n5040);
  CHECK(v.prime_index == 5);
  CHECK_FALSE(v.condition);
  CHECK_FALSE(v.criterion);
  CHECK_FALSE(v.increases);

  FactoredInteger w14{std::vector<std::uint32_t>{5, 3, 2, 1, 1, 1, 1}};
  auto w = check_all(w14, 8, cfg);
  CHECK(w.condition);
  CHECK(w.criterion);
  CHECK(w.increases);
}

TEST_CASE("criterion/direct equivalence over the SA corpus") {
  DecisionConfig cfg;
  auto corpus = sa_corpus(300);
  int mismatches = 0;
  for (const auto& n : corpus) {
    for (std::size_t l = 1; l <= 30; ++l) {
      if (root_criterion(n, l, cfg) != g_increases(n, l, cfg)) {
        ++mismatches;
        CAPTURE(n.format());
        CAPTURE(l);
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("power condition implies G increase") {
  DecisionConfig cfg;
  int triggered = 0, broken = 0;
  auto probe = [&](const FactoredInteger& n, std::size_t l) {
    if (!power_condition(n, l, cfg)) return;
    ++triggered;
    if (!g_increases(n, l, cfg)) ++broken;
  };
  for (const auto& n : sa_corpus(300))
    for (std::size_t l = 1; l <= 30; ++l) probe(n, l);

  std::mt19937_64 rng(20150406);
  std::uniform_int_distribution<std::size_t> ld(1, 30);
  for (int i = 0; i < 2000; ++i) {
    auto n = samplers::random_nonincreasing(rng, 100.0);
    if (n.is_two()) continue;
    probe(n, ld(rng));
  }
  CHECK(broken == 0);
  CHECK(triggered > 0);  // the implication must not pass vacuously
  MESSAGE("condition held " << triggered << " times");
}

TEST_CASE("verdicts are stable when the start precision doubles") {
  DecisionConfig cfg;
  DecisionConfig dbl = cfg.doubled();
  auto corpus = sa_corpus(40);
  for (const auto& n : corpus) {
    for (std::size_t l = 1; l <= 10; ++l) {
      CHECK(root_criterion(n, l, cfg) == root_criterion(n, l, dbl));
      CHECK(g_increases(n, l, cfg) == g_increases(n, l, dbl));
      CHECK(power_condition(n, l, cfg) == power_condition(n, l, dbl));
    }
  }
}

}  // TEST_SUITE
