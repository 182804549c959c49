#include <cmath>

#include <doctest.h>
#include <gronwall/errors.hpp>
#include <gronwall/primes.hpp>

using namespace gw;

TEST_SUITE("primes") {

TEST_CASE("nth prime, 1-based") {
  CHECK(primes::nth(1) == 2);
  CHECK(primes::nth(2) == 3);
  CHECK(primes::nth(3) == 5);
  CHECK(primes::nth(10) == 29);
  CHECK(primes::nth(25) == 97);
  CHECK(primes::nth(100) == 541);
  CHECK(primes::nth(10000) == 104729);
  CHECK_THROWS_AS(primes::nth(0), DomainError);
}

TEST_CASE("log of nth prime") {
  CHECK(primes::log_nth(1) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(primes::log_nth(25) == doctest::Approx(std::log(97.0)).epsilon(1e-14));
}

TEST_CASE("primality") {
  CHECK(primes::is_prime(2));
  CHECK(primes::is_prime(3));
  CHECK(primes::is_prime(97));
  CHECK(primes::is_prime(999983));
  CHECK_FALSE(primes::is_prime(1));
  CHECK_FALSE(primes::is_prime(98));
  CHECK_FALSE(primes::is_prime(5040));
}

TEST_CASE("index lookup") {
  REQUIRE(primes::index_of(2).has_value());
  CHECK(*primes::index_of(2) == 1);
  CHECK(*primes::index_of(97) == 25);
  CHECK(*primes::index_of(999983) == 78498);
  CHECK_FALSE(primes::index_of(98).has_value());
  CHECK_FALSE(primes::index_of(1).has_value());
  CHECK_THROWS_AS(primes::index_of(1000003), ParseError);
}

TEST_CASE("nth and index_of are inverse on a sample") {
  for (std::size_t i = 1; i <= 2000; i += 7) {
    auto p = primes::nth(i);
    auto back = primes::index_of(p);
    REQUIRE(back.has_value());
    CHECK(*back == i);
  }
}

}  // TEST_SUITE
