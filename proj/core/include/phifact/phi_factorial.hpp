#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phifact/exponent_vec.hpp"
#include "phifact/rational.hpp"

namespace phifact {

// Exponent vectors E(n) of phi(n!) for 0 <= n <= n_max.
//
// For each prime q the map n -> nu_q(phi(n!)) is a non-decreasing step
// function. It is stored as its inverse: thresholds(q)[k] is the least n with
// nu_q(phi(n!)) >= k + 1. Reading a valuation is a binary search over the
// thresholds; finding the least n that reaches a target is a single lookup.
class PhiFactorialTable {
 public:
  static constexpr std::uint64_t kMaxSize = 100'000'000;

  std::uint64_t n_max() const noexcept { return n_max_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  // nu_q(phi(n!)). q need not be prime (the answer is then 0 unless q is a
  // tabulated prime). Throws BoundsError if n > n_max.
  std::uint64_t exponent(std::uint64_t q, std::uint64_t n) const;

  // E(n) as a factored integer.
  ExponentVec exponents(std::uint64_t n) const;

  // Least n <= n_max with nu_q(phi(n!)) >= target, if any. target 0 gives 0.
  std::optional<std::uint64_t> least_reaching(std::uint64_t q, std::uint64_t target) const;

  // Thresholds of a tabulated prime (empty span for anything else).
  std::span<const std::uint32_t> thresholds(std::uint64_t q) const;

 private:
  friend PhiFactorialTable build_table(std::uint64_t n_max);

  std::optional<std::size_t> index_of(std::uint64_t q) const noexcept;
  void check_index(std::uint64_t n) const;

  std::uint64_t n_max_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<std::vector<std::uint32_t>> thresholds_;
};

// Incremental build: E(n) = E(n-1) + factorize(n) for composite n and
// E(p) = E(p-1) + factorize(p-1) for prime p.
PhiFactorialTable build_table(std::uint64_t n_max);

// ceil(9 * 2N / 8) + 64, the starting size for solving pairs with a, b <= N.
std::uint64_t recommended_table_size(std::uint64_t pair_bound) noexcept;

struct PairResult {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;  // c(a,b)
  Rational r;           // c / (a + b)

  friend bool operator==(const PairResult&, const PairResult&) = default;
};

// Signed exponents of T(a,b;c) = phi(c!) / (phi(a!) phi(b!)).
SignedExponentVec t_valuation(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                              const PhiFactorialTable& table);

// c(a,b): least c >= 1 with phi(a!) phi(b!) | phi(c!). Each prime q of the
// target gives its own least c_q; the answer is the largest of them.
// Throws TableExhausted when c(a,b) > table.n_max().
PairResult c_of(std::uint64_t a, std::uint64_t b, const PhiFactorialTable& table);

Rational r_of(const PairResult& result);

// Owns a table and regrows it (at least doubling) whenever a pair exhausts it.
class PairSolver {
 public:
  explicit PairSolver(std::uint64_t pair_bound);

  PairResult solve(std::uint64_t a, std::uint64_t b);
  // Rebuild now so that pairs up to pair_bound fit and c values up to
  // at_least are reachable.
  void ensure(std::uint64_t pair_bound, std::uint64_t at_least = 0);

  const PhiFactorialTable& table() const noexcept { return table_; }
  std::size_t rebuilds() const noexcept { return rebuilds_; }

 private:
  void grow(std::uint64_t at_least);

  PhiFactorialTable table_;
  std::size_t rebuilds_ = 0;
};

}  // namespace phifact
