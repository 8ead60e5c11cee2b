#pragma once

#include <cstdint>
#include <utility>

#include "phifact/primes.hpp"
#include "phifact/report.hpp"

namespace phifact {

// Ratio of nu_q(prod_{p<x}(p-1)) to the main term q/(q-1)^2 * x/ln x. Only
// gated (band [0.9, 1.3]) for x >= 10^4; smaller x is report-only.
VerificationReport check_lemma2_ratio(std::uint64_t q, std::uint64_t x, const PrimeTable& table);

// nu_q(prod_{p<=a}(p-1)) <= 0.23a/(q-1) + 7 ln a / ln q for primes 7 < q <= q_max,
// every a <= min(a_max, 10^4) and a geometric grid of a beyond that.
VerificationReport check_lemma6(std::uint64_t a_max, std::uint64_t q_max, const PrimeTable& table);

// #primes in {id+1 : 1 <= i <= n} <= 0.46n + 7, checked for every prefix
// length n <= n_max. Requires d > 7 and gcd(d, 105) = 1.
VerificationReport check_lemma7(std::uint64_t d, std::uint64_t n_max);

// Number of i in [1, k] with gcd(2ri + 1, 105) = 1.
std::uint64_t lemma8_residue_count(std::uint64_t k, std::uint64_t r);

// For every k <= k_max and every residue r mod 105 coprime to 105, the
// residue count is at most floor(k/2) + 1.
VerificationReport check_lemma8_residues(std::uint64_t k_max = 173);

// #primes in {2qi + 1 : 1 <= i <= k}. Requires prime q > 7.
std::uint64_t count_lemma8_direct(std::uint64_t q, std::uint64_t k);

// b = k prod_{p<=a}(p-1) - a, with T(a,b;a+b) checked integral.
std::pair<std::uint64_t, VerificationReport> construct_prop10_pair(std::uint64_t a, std::uint64_t k);

// phi(a!) as an integer from E(a), then T(a, phi(a!)-1; phi(a!)) == 1 and
// c(a, phi(a!)-1) <= phi(a!). Supported for 4 <= a <= 8.
VerificationReport check_phi_identity(std::uint64_t a);

// floor(a/(4q)) == floor(floor(a/(2q))/2) for a <= sample_max, primes q <= sample_max.
VerificationReport check_floor_identity(std::uint64_t sample_max);

}  // namespace phifact
