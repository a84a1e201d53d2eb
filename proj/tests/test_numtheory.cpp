#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gaussq/numtheory.hpp"

using namespace gaussq;

TEST_CASE("modular arithmetic") {
  CHECK(mulmod(1ULL << 40, 1ULL << 40, 1000000007ULL) == 496641140ULL);
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(powmod(7, 0, 1) == 0);
  CHECK(invmod(3, 7) == 5);
  CHECK(invmod(2, 5) == 3);
  CHECK_THROWS_AS(invmod(6, 9), DomainError);
}

TEST_CASE("primes and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(10007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  const auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == PrimePower{2, 3, 8});
  CHECK(f[1] == PrimePower{3, 2, 9});
  CHECK(f[2] == PrimePower{5, 1, 5});
  CHECK(factorize(1).empty());
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(euler_phi(360) == 96);
  CHECK(euler_phi(1) == 1);
  CHECK(ipow(3, 5) == 243);
}

TEST_CASE("valuation") {
  CHECK(valuation(48, 2, 10) == 4);
  CHECK(valuation(7, 3, 10) == 0);
  CHECK(valuation(0, 3, 2) == 2);
  CHECK(valuation(81, 3, 2) == 2);
}

TEST_CASE("Turn is a reduced fraction of a full turn") {
  const Turn a(3, 12);
  CHECK(a.num() == 1);
  CHECK(a.den() == 4);
  CHECK(Turn(-1, 4) == Turn(3, 4));
  CHECK(Turn(1, 3) + Turn(2, 3) == Turn(0, 1));
  CHECK(Turn(1, 6) - Turn(1, 3) == Turn(5, 6));
  CHECK(Turn(1, 4).value() == std::complex<double>(0, 1));
  CHECK(Turn(1, 2).value() == std::complex<double>(-1, 0));
  CHECK(std::abs(root_of_unity(-1, 8) - std::polar(1.0, -std::numbers::pi / 4)) < 1e-15);
}

TEST_CASE("angles") {
  CHECK(phase_in_turn_range({0, -1}) == doctest::Approx(3 * std::numbers::pi / 2));
  CHECK(phase_in_turn_range({1, 0}) == 0.0);
  CHECK(wrap_distance(0.1, 2 * std::numbers::pi - 0.1) == doctest::Approx(0.2));
  CHECK(wrap_distance(-0.5, 0.5) == doctest::Approx(1.0));
  CHECK(wrap_distance(0, std::numbers::pi) == doctest::Approx(std::numbers::pi));
}
