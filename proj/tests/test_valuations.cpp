#include <doctest.h>

#include <limits>
#include <random>

#include "phifact/errors.hpp"
#include "phifact/primes.hpp"
#include "phifact/valuations.hpp"
#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace phifact;

TEST_CASE("vec_add") {
  CHECK(vec_add({}, {}) == ExponentVec{});
  CHECK(vec_add({{2, 1}}, {{2, 1}, {3, 1}}) == ExponentVec{{2, 2}, {3, 1}});
  CHECK(vec_add(factorize(24), factorize(35)) == factorize(840));
  const ExponentVec big{{2, std::numeric_limits<std::int64_t>::max()}};
  CHECK_THROWS_AS(vec_add(big, {{2, 1}}), ArithmeticError);
}

TEST_CASE("vec_sub") {
  CHECK(vec_sub({{2, 3}}, {{2, 3}}).empty());
  CHECK(vec_sub({{2, 10}, {3, 2}}, {{2, 7}, {3, 2}}) == SignedExponentVec{{2, 3}});
  CHECK(vec_sub({{3, 1}}, {{2, 1}}) == SignedExponentVec{{2, -1}, {3, 1}});
  CHECK(is_integral(vec_sub({{2, 10}, {3, 2}}, {{2, 7}})));
  CHECK_FALSE(is_integral(vec_sub({{3, 1}}, {{2, 1}})));
}

TEST_CASE("dominates") {
  CHECK(dominates({{2, 10}, {3, 2}}, {{2, 10}, {3, 2}}));
  CHECK_FALSE(dominates({{2, 10}, {3, 2}}, {{2, 10}, {3, 2}, {5, 1}}));
  CHECK(dominates(factorize(9216), factorize(1152)));
  CHECK(dominates({}, {}));
}

TEST_CASE("dominates iff the difference has no negative entry") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t x = rng() % 100'000 + 1;
    const std::uint64_t y = rng() % 1000 + 1;
    const auto u = factorize(x);
    const auto v = factorize(y);
    const bool no_negative = is_integral(vec_sub(u, v));
    CHECK(dominates(u, v) == no_negative);
    CHECK(dominates(u, v) == (x % y == 0));
  }
}

TEST_CASE("exponent vector construction and rendering") {
  CHECK(ExponentVec{}.to_string() == "1");
  CHECK(ExponentVec{{3, 2}, {2, 10}}.to_string() == "2^10 * 3^2");
  CHECK(SignedExponentVec{{2, -1}, {3, 1}}.to_string() == "2^-1 * 3^1");
  CHECK(ExponentVec{{5, 0}}.empty());
  CHECK(ExponentVec{{5, 1}, {5, 2}} == ExponentVec{{5, 3}});
  CHECK_THROWS_AS((ExponentVec{{2, -1}}), DomainError);
  CHECK_THROWS_AS((ExponentVec{{1, 1}}), DomainError);
  CHECK(to_integer(ExponentVec{{2, 64}}) == std::nullopt);
  CHECK(to_integer(ExponentVec{{2, 63}}) == (1ULL << 63));
}

TEST_CASE("legendre and digit sums") {
  CHECK(legendre_valuation(10, 2) == 8);
  CHECK(legendre_valuation(0, 7) == 0);
  CHECK((10 - digit_sum(10, 2)) / (2 - 1) == 8);
  CHECK(digit_sum(10, 2) == 2);
  CHECK(digit_sum(0, 5) == 0);
  CHECK(digit_sum(8 * 131 + 1, 131) == 9);
  CHECK_THROWS_AS(digit_sum(10, 1), DomainError);
}

TEST_CASE("legendre floor sum equals the digit form for n <= 10^5, p <= 100") {
  const auto table = sieve_primes(100);
  for (std::uint32_t p : table.primes()) {
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
      REQUIRE(legendre_valuation(n, p) == (n - digit_sum(n, p)) / (p - 1));
    }
  }
}

TEST_CASE("kummer carries") {
  CHECK(kummer_carries(1, 1, 2) == 1);
  CHECK(kummer_carries(3, 5, 2) == 3);
  CHECK(kummer_carries(1049, 1049, 131) == 0);
}

TEST_CASE("kummer carries equal the legendre difference for a, b <= 2000") {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (std::uint64_t a = 1; a <= 2000; ++a) {
      const auto va = legendre_valuation(a, p);
      for (std::uint64_t b = 1; b <= 2000; ++b) {
        REQUIRE(kummer_carries(a, b, p) == legendre_valuation(a + b, p) - va - legendre_valuation(b, p));
      }
    }
  }
}

TEST_CASE("shifted prime product valuation examples") {
  const auto table = sieve_primes(100);
  CHECK(shifted_prime_product_valuation(20, 3, table) == 4);
  CHECK(shifted_prime_product_valuation(3, 5, table) == 0);
  CHECK(shifted_prime_product_valuation(50, 53, table) == 0);
  CHECK(shifted_prime_product_valuation(101, 2, table) == shifted_prime_product_valuation(100, 2, table));
  CHECK_THROWS_AS(shifted_prime_product_valuation(102, 2, table), BoundsError);
}

TEST_CASE("shifted prime product valuation matches factoring every p-1, x <= 10^4, q <= 50") {
  const auto table = sieve_primes(10'000);
  for (std::uint32_t q : table.primes()) {
    if (q > 50) break;
    std::int64_t running = 0;  // nu_q(prod_{p < x} (p-1)) by direct factoring
    for (std::uint64_t x = 1; x <= 10'000; ++x) {
      if (x >= 2 && oracle::is_prime(x - 1)) running += oracle::valuation(x - 2 == 0 ? 1 : x - 2, q);
      REQUIRE(static_cast<std::int64_t>(shifted_prime_product_valuation(x, q, table)) == running);
    }
    CHECK(running == oracle::shifted_product_valuation(10'001, q));
  }
}
