#include "phifact/exponent_vec.hpp"

#include <algorithm>
#include <limits>

#include "phifact/errors.hpp"

namespace phifact {

namespace detail {

template <bool Signed>
BasicExponentVec<Signed>::BasicExponentVec(std::initializer_list<std::pair<std::uint64_t, std::int64_t>> entries) {
  std::vector<PrimePower> raw;
  raw.reserve(entries.size());
  for (const auto& [p, e] : entries) raw.push_back({p, e});
  *this = from_entries(std::move(raw));
}

template <bool Signed>
BasicExponentVec<Signed> BasicExponentVec<Signed>::from_entries(std::vector<PrimePower> entries) {
  std::sort(entries.begin(), entries.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
  BasicExponentVec out;
  for (const PrimePower& pp : entries) {
    if (pp.prime < 2) throw DomainError("exponent vector key " + std::to_string(pp.prime) + " is not prime");
    if (!out.entries_.empty() && out.entries_.back().prime == pp.prime) {
      if (__builtin_add_overflow(out.entries_.back().exponent, pp.exponent, &out.entries_.back().exponent)) {
        throw ArithmeticError("exponent overflow");
      }
    } else {
      out.entries_.push_back(pp);
    }
  }
  std::erase_if(out.entries_, [](const PrimePower& pp) { return pp.exponent == 0; });
  if constexpr (!Signed) {
    for (const PrimePower& pp : out.entries_) {
      if (pp.exponent < 0) throw DomainError("negative exponent in an unsigned exponent vector");
    }
  }
  return out;
}

template <bool Signed>
std::int64_t BasicExponentVec<Signed>::exponent(std::uint64_t prime) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                             [](const PrimePower& pp, std::uint64_t p) { return pp.prime < p; });
  return it != entries_.end() && it->prime == prime ? it->exponent : 0;
}

template <bool Signed>
std::string BasicExponentVec<Signed>::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const PrimePower& pp : entries_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    out += '^';
    out += std::to_string(pp.exponent);
  }
  return out;
}

template class BasicExponentVec<false>;
template class BasicExponentVec<true>;

}  // namespace detail

namespace {

// Merge two sorted entry lists with a combining function on exponents.
template <typename Combine>
std::vector<PrimePower> merge(std::span<const PrimePower> u, std::span<const PrimePower> v, Combine combine) {
  std::vector<PrimePower> out;
  out.reserve(u.size() + v.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < u.size() || j < v.size()) {
    if (j == v.size() || (i < u.size() && u[i].prime < v[j].prime)) {
      out.push_back({u[i].prime, combine(u[i].exponent, 0)});
      ++i;
    } else if (i == u.size() || v[j].prime < u[i].prime) {
      out.push_back({v[j].prime, combine(0, v[j].exponent)});
      ++j;
    } else {
      out.push_back({u[i].prime, combine(u[i].exponent, v[j].exponent)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExponentVec vec_add(const ExponentVec& u, const ExponentVec& v) {
  return ExponentVec::from_entries(merge(u.entries(), v.entries(), [](std::int64_t x, std::int64_t y) {
    std::int64_t s;
    if (__builtin_add_overflow(x, y, &s)) throw ArithmeticError("exponent overflow in vec_add");
    return s;
  }));
}

SignedExponentVec vec_sub(const ExponentVec& u, const ExponentVec& v) {
  return SignedExponentVec::from_entries(
      merge(u.entries(), v.entries(), [](std::int64_t x, std::int64_t y) { return x - y; }));
}

bool dominates(const ExponentVec& u, const ExponentVec& v) noexcept {
  for (const PrimePower& pp : v.entries()) {
    if (u.exponent(pp.prime) < pp.exponent) return false;
  }
  return true;
}

bool is_integral(const SignedExponentVec& r) noexcept {
  return std::all_of(r.entries().begin(), r.entries().end(), [](const PrimePower& pp) { return pp.exponent > 0; });
}

std::optional<std::uint64_t> to_integer(const ExponentVec& u) noexcept {
  std::uint64_t value = 1;
  for (const PrimePower& pp : u.entries()) {
    for (std::int64_t i = 0; i < pp.exponent; ++i) {
      if (__builtin_mul_overflow(value, pp.prime, &value)) return std::nullopt;
    }
  }
  return value;
}

}  // namespace phifact
