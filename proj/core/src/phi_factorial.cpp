#include "phifact/phi_factorial.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "phifact/errors.hpp"
#include "phifact/primes.hpp"

namespace phifact {

PhiFactorialTable build_table(std::uint64_t n_max) {
  if (n_max < 1) throw BoundsError("table size must be at least 1");
  if (n_max > PhiFactorialTable::kMaxSize) {
    throw BoundsError("table size " + std::to_string(n_max) + " exceeds the limit of " +
                      std::to_string(PhiFactorialTable::kMaxSize));
  }
  const PrimeTable sieve(std::max<std::uint64_t>(n_max, 2));

  PhiFactorialTable table;
  table.n_max_ = n_max;
  const std::size_t count = sieve.count_upto(n_max);
  table.primes_.assign(sieve.primes().begin(), sieve.primes().begin() + static_cast<std::ptrdiff_t>(count));
  table.thresholds_.resize(count);

  // phi(n!) = phi((n-1)!) * n when n is composite (all its primes already
  // divide (n-1)!), and phi((n-1)!) * (n-1) when n is prime.
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const bool prime = sieve.contains(n);
    const ExponentVec step = factorize(prime ? n - 1 : n, sieve);
    for (const PrimePower& pp : step.entries()) {
      const auto idx = table.index_of(pp.prime);
      assert(idx.has_value());
      auto& thr = table.thresholds_[*idx];
      assert(thr.empty() || thr.back() <= n);
      thr.insert(thr.end(), static_cast<std::size_t>(pp.exponent), static_cast<std::uint32_t>(n));
    }
  }
  for (auto& thr : table.thresholds_) thr.shrink_to_fit();
  return table;
}

std::uint64_t recommended_table_size(std::uint64_t pair_bound) noexcept {
  return (9 * 2 * pair_bound + 7) / 8 + 64;
}

std::optional<std::size_t> PhiFactorialTable::index_of(std::uint64_t q) const noexcept {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), q);
  if (it == primes_.end() || *it != q) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

void PhiFactorialTable::check_index(std::uint64_t n) const {
  if (n > n_max_) {
    throw BoundsError("index " + std::to_string(n) + " beyond phi-factorial table size " + std::to_string(n_max_));
  }
}

std::uint64_t PhiFactorialTable::exponent(std::uint64_t q, std::uint64_t n) const {
  check_index(n);
  const auto idx = index_of(q);
  if (!idx) return 0;
  const auto& thr = thresholds_[*idx];
  return static_cast<std::uint64_t>(std::upper_bound(thr.begin(), thr.end(), n) - thr.begin());
}

ExponentVec PhiFactorialTable::exponents(std::uint64_t n) const {
  check_index(n);
  std::vector<PrimePower> entries;
  for (std::size_t i = 0; i < primes_.size() && primes_[i] <= n; ++i) {
    const auto& thr = thresholds_[i];
    const auto e = std::upper_bound(thr.begin(), thr.end(), n) - thr.begin();
    if (e > 0) entries.push_back({primes_[i], e});
  }
  return ExponentVec::from_entries(std::move(entries));
}

std::optional<std::uint64_t> PhiFactorialTable::least_reaching(std::uint64_t q, std::uint64_t target) const {
  if (target == 0) return 0;
  const auto idx = index_of(q);
  if (!idx || target > thresholds_[*idx].size()) return std::nullopt;
  return thresholds_[*idx][target - 1];
}

std::span<const std::uint32_t> PhiFactorialTable::thresholds(std::uint64_t q) const {
  const auto idx = index_of(q);
  if (!idx) return {};
  return thresholds_[*idx];
}

SignedExponentVec t_valuation(std::uint64_t a, std::uint64_t b, std::uint64_t c, const PhiFactorialTable& table) {
  return vec_sub(table.exponents(c), vec_add(table.exponents(a), table.exponents(b)));
}

PairResult c_of(std::uint64_t a, std::uint64_t b, const PhiFactorialTable& table) {
  if (a < 1 || b < 1) throw DomainError("c(a,b) needs positive a and b");
  if (std::max(a, b) > table.n_max()) {
    throw TableExhausted("pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside table of size " +
                             std::to_string(table.n_max()),
                         std::max(a, b));
  }
  std::uint64_t c = 1;
  const auto primes = table.primes();
  const std::uint64_t top = std::max(a, b);
  for (std::size_t i = 0; i < primes.size() && primes[i] <= top; ++i) {
    const auto thr = table.thresholds(primes[i]);
    const auto ea = static_cast<std::uint64_t>(std::upper_bound(thr.begin(), thr.end(), a) - thr.begin());
    const auto eb = static_cast<std::uint64_t>(std::upper_bound(thr.begin(), thr.end(), b) - thr.begin());
    const std::uint64_t target = ea + eb;
    if (target == 0) continue;
    if (target > thr.size()) {
      throw TableExhausted("c(" + std::to_string(a) + "," + std::to_string(b) + ") exceeds table size " +
                               std::to_string(table.n_max()) + " (prime " + std::to_string(primes[i]) + ")",
                           table.n_max() + 1);
    }
    c = std::max<std::uint64_t>(c, thr[target - 1]);
  }
  return PairResult{a, b, c, Rational(static_cast<std::int64_t>(c), static_cast<std::int64_t>(a + b))};
}

Rational r_of(const PairResult& result) {
  return Rational(static_cast<std::int64_t>(result.c), static_cast<std::int64_t>(result.a + result.b));
}

PairSolver::PairSolver(std::uint64_t pair_bound)
    : table_(build_table(recommended_table_size(std::max<std::uint64_t>(pair_bound, 1)))) {}

void PairSolver::grow(std::uint64_t at_least) {
  table_ = build_table(std::max(2 * table_.n_max(), at_least));
  ++rebuilds_;
}

void PairSolver::ensure(std::uint64_t pair_bound, std::uint64_t at_least) {
  const std::uint64_t wanted = std::max(recommended_table_size(pair_bound), at_least);
  if (wanted > table_.n_max()) grow(wanted);
}

PairResult PairSolver::solve(std::uint64_t a, std::uint64_t b) {
  for (;;) {
    try {
      return c_of(a, b, table_);
    } catch (const TableExhausted& e) {
      grow(e.lower_bound());
    }
  }
}

}  // namespace phifact
