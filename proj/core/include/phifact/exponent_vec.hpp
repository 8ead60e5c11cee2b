#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace phifact {

struct PrimePower {
  std::uint64_t prime;
  std::int64_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

namespace detail {

// Sparse prime -> exponent map kept as a vector sorted by prime. Zero
// exponents are never stored; the unsigned flavour also rejects negatives.
template <bool Signed>
class BasicExponentVec {
 public:
  BasicExponentVec() = default;
  BasicExponentVec(std::initializer_list<std::pair<std::uint64_t, std::int64_t>> entries);

  // Takes entries in any order; equal primes are merged, zeros dropped.
  static BasicExponentVec from_entries(std::vector<PrimePower> entries);

  std::int64_t exponent(std::uint64_t prime) const noexcept;
  std::span<const PrimePower> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  // Canonical text: "p1^e1 * p2^e2 * ..." in ascending prime order, "1" when empty.
  std::string to_string() const;

  friend bool operator==(const BasicExponentVec&, const BasicExponentVec&) = default;

 private:
  std::vector<PrimePower> entries_;
};

}  // namespace detail

// Factored positive integer.
using ExponentVec = detail::BasicExponentVec<false>;
// Factored non-zero rational; integral iff no exponent is negative.
using SignedExponentVec = detail::BasicExponentVec<true>;

// Product of the represented integers. Throws ArithmeticError on overflow.
ExponentVec vec_add(const ExponentVec& u, const ExponentVec& v);
// The rational u / v.
SignedExponentVec vec_sub(const ExponentVec& u, const ExponentVec& v);
// True iff the integer of v divides the integer of u.
bool dominates(const ExponentVec& u, const ExponentVec& v) noexcept;

bool is_integral(const SignedExponentVec& r) noexcept;

// The represented integer, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> to_integer(const ExponentVec& u) noexcept;

}  // namespace phifact
