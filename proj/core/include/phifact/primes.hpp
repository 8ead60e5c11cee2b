#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phifact/exponent_vec.hpp"

namespace phifact {

// All primes up to an inclusive limit, plus an odd-only bit set for O(1)
// membership queries. Immutable once built.
class PrimeTable {
 public:
  static constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 32;
  // Limits above this are sieved segment by segment.
  static constexpr std::uint64_t kFlatSieveLimit = 10'000'000;

  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

  // n must not exceed limit().
  bool contains(std::uint64_t n) const;
  // Number of primes p <= x, for x <= limit().
  std::size_t count_upto(std::uint64_t x) const;

 private:
  bool odd_bit(std::uint64_t n) const noexcept { return (bits_[n >> 7] >> ((n >> 1) & 63)) & 1; }

  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint64_t> bits_;  // bit (n-1)/2 set iff odd n is prime
};

PrimeTable sieve_primes(std::uint64_t limit);

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

// Trial division by the table's primes, Pollard-Brent rho for whatever is left.
ExponentVec factorize(std::uint64_t n, const PrimeTable* table = nullptr);
inline ExponentVec factorize(std::uint64_t n, const PrimeTable& table) { return factorize(n, &table); }

// pi(x; modulus, residue): primes p < x (strict) with p = residue (mod modulus).
// Requires x - 1 <= table.limit().
std::uint64_t count_primes_in_ap(std::uint64_t x, std::uint64_t modulus, std::int64_t residue,
                                 const PrimeTable& table);
std::uint64_t count_primes_in_ap(std::uint64_t x, std::uint64_t modulus, std::int64_t residue);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace phifact
