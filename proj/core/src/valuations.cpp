#include "phifact/valuations.hpp"

#include <cassert>
#include <string>

#include "phifact/errors.hpp"

namespace phifact {

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw DomainError("digit base must be at least 2");
  std::uint64_t s = 0;
  for (; n > 0; n /= base) s += n % base;
  return s;
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw DomainError("legendre_valuation needs a prime, got " + std::to_string(p));
  std::uint64_t v = 0;
  for (std::uint64_t m = n / p; m > 0; m /= p) v += m;
  assert(v == (n - digit_sum(n, p)) / (p - 1));
  return v;
}

std::uint64_t kummer_carries(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p < 2) throw DomainError("kummer_carries needs a prime, got " + std::to_string(p));
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

std::uint64_t shifted_prime_product_valuation(std::uint64_t x, std::uint64_t q, const PrimeTable& table) {
  if (q < 2) throw DomainError("shifted_prime_product_valuation needs a prime, got " + std::to_string(q));
  if (x > 0 && x - 1 > table.limit()) {
    throw BoundsError("valuation over primes below " + std::to_string(x) + " needs a sieve to " +
                      std::to_string(x - 1) + ", table stops at " + std::to_string(table.limit()));
  }
  // Each p < x contributes nu_q(p - 1) = #{n >= 1 : q^n | p - 1}; swap the
  // order of summation.
  std::uint64_t total = 0;
  for (std::uint64_t qn = q; qn < x; qn *= q) {
    total += count_primes_in_ap(x, qn, 1, table);
    if (qn > x / q) break;
  }
  return total;
}

}  // namespace phifact
