#pragma once

#include <cstdint>

#include "phifact/exponent_vec.hpp"
#include "phifact/primes.hpp"

namespace phifact {

// nu_p(n!) by the floor sum  sum_i floor(n / p^i). Debug builds also check the
// digit form (n - s_p(n)) / (p - 1).
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

// Sum of the base-`base` digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

// Carries in the base-p addition a + b, i.e. nu_p(binomial(a + b, a)).
std::uint64_t kummer_carries(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// nu_q of prod_{p < x} (p - 1), summed as sum_{q^n < x} pi(x; q^n, 1).
// Requires x - 1 <= table.limit().
std::uint64_t shifted_prime_product_valuation(std::uint64_t x, std::uint64_t q, const PrimeTable& table);

}  // namespace phifact
