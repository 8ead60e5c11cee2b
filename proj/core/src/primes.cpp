#include "phifact/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "phifact/errors.hpp"

namespace phifact {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Segment length (in numbers) for limits above the flat-sieve threshold.
constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 21;

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw BoundsError("sieve limit must be at least 2, got " + std::to_string(limit));
  if (limit > kMaxLimit) throw BoundsError("sieve limit " + std::to_string(limit) + " exceeds 2^32");

  bits_.assign(limit / 128 + 1, 0);
  primes_.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) / std::log(static_cast<double>(limit))) + 8);
  primes_.push_back(2);

  // Odd base primes up to sqrt(limit), from a small flat sieve.
  const std::uint64_t root = isqrt(limit);
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = false;
  }

  const std::uint64_t span = limit <= kFlatSieveLimit ? limit + 1 : kSegmentSpan;
  std::vector<std::uint8_t> composite;
  for (std::uint64_t lo = 3; lo <= limit; lo += span) {
    const std::uint64_t hi = std::min(limit, lo + span - 1);
    // composite[k] refers to the odd number first_odd + 2k.
    const std::uint64_t first_odd = lo | 1;
    if (first_odd > hi) break;
    const std::uint64_t count = (hi - first_odd) / 2 + 1;
    composite.assign(count, 0);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (first_odd + p - 1) / p * p);
      if ((start & 1) == 0) start += p;
      for (std::uint64_t m = start; m <= hi; m += 2 * p) composite[(m - first_odd) / 2] = 1;
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      if (composite[k]) continue;
      const std::uint64_t n = first_odd + 2 * k;
      primes_.push_back(static_cast<std::uint32_t>(n));
      bits_[n >> 7] |= std::uint64_t{1} << ((n >> 1) & 63);
    }
  }
  primes_.shrink_to_fit();
}

bool PrimeTable::contains(std::uint64_t n) const {
  if (n > limit_) {
    throw BoundsError("query " + std::to_string(n) + " beyond sieve limit " + std::to_string(limit_));
  }
  if (n < 2) return false;
  if ((n & 1) == 0) return n == 2;
  return odd_bit(n);
}

std::size_t PrimeTable::count_upto(std::uint64_t x) const {
  if (x > limit_) {
    throw BoundsError("pi(" + std::to_string(x) + ") beyond sieve limit " + std::to_string(limit_));
  }
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable sieve_primes(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to one base; n odd, n > 2.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint32_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint32_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  // Jim Sinclair's base set, exact below 2^64.
  static constexpr std::uint64_t kBases[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (std::uint64_t a : kBases) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

namespace {

// Some non-trivial factor of composite odd n.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2;
    std::uint64_t x = 2;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t ys = 2;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

ExponentVec factorize(std::uint64_t n, const PrimeTable* table) {
  if (n == 0) throw DomainError("factorize(0) is undefined");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    std::int64_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.push_back({p, e});
  };

  std::uint64_t trial_bound = 0;
  if (table != nullptr) {
    for (std::uint32_t p : table->primes()) {
      if (std::uint64_t{p} * p > n) break;
      strip(p);
      trial_bound = p;
    }
  } else {
    strip(2);
    for (std::uint64_t p = 3; p < 1000 && p * p <= n; p += 2) strip(p);
    trial_bound = 1000;
  }
  if (n > 1) {
    // Whatever survives trial division is prime if it is below the square of
    // the next candidate divisor; otherwise hand it to rho.
    const u128 next = static_cast<u128>(trial_bound) + 1;
    if (next * next > n) {
      out.push_back({n, 1});
    } else {
      split(n, out);
    }
  }
  return ExponentVec::from_entries(std::move(out));
}

std::uint64_t count_primes_in_ap(std::uint64_t x, std::uint64_t modulus, std::int64_t residue,
                                 const PrimeTable& table) {
  if (modulus == 0) throw DomainError("modulus must be positive");
  if (x <= 2) return 0;
  if (x - 1 > table.limit()) {
    throw BoundsError("count_primes_in_ap needs primes below " + std::to_string(x) + " but the table stops at " +
                      std::to_string(table.limit()));
  }
  const auto m = static_cast<std::int64_t>(modulus);
  const auto r = static_cast<std::uint64_t>(((residue % m) + m) % m);

  const std::size_t below = table.count_upto(x - 1);
  const std::uint64_t candidates = r < x ? (x - 1 - r) / modulus + 1 : 0;
  std::uint64_t count = 0;
  if (candidates >= below) {
    for (std::uint32_t p : table.primes().first(below)) count += (p % modulus == r);
  } else {
    for (std::uint64_t k = 0; k < candidates; ++k) count += table.contains(r + k * modulus);
  }
  return count;
}

std::uint64_t count_primes_in_ap(std::uint64_t x, std::uint64_t modulus, std::int64_t residue) {
  if (x <= 2) return 0;
  return count_primes_in_ap(x, modulus, residue, PrimeTable(x - 1));
}

}  // namespace phifact
