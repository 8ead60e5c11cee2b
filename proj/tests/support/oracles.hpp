#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except for the value types used to compare results.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Factorization = std::map<std::uint64_t, std::int64_t>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Factorization factor(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, e] : factor(n)) result = result / p * (p - 1);
  return result;
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

inline std::int64_t valuation(std::uint64_t n, std::uint64_t q) {
  std::int64_t v = 0;
  for (; n % q == 0; n /= q) ++v;
  return v;
}

// nu_q(prod_{p < x} (p - 1)) by factoring every p - 1.
inline std::int64_t shifted_product_valuation(std::uint64_t x, std::uint64_t q) {
  std::int64_t v = 0;
  for (std::uint64_t p = 3; p < x; ++p) {
    if (is_prime(p)) v += valuation(p - 1, q);
  }
  return v;
}

// Exponent vectors of phi(n!) = n! prod_{p<=n} (p-1)/p for n = 0..n_max,
// accumulated factor by factor.
class PhiFactorials {
 public:
  explicit PhiFactorials(std::uint64_t n_max) : e_(n_max + 1) {
    Factorization cur;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
      for (const auto& [p, k] : factor(n)) cur[p] += k;
      if (is_prime(n)) {
        cur[n] -= 1;
        for (const auto& [p, k] : factor(n - 1)) cur[p] += k;
      }
      Factorization clean;
      for (const auto& [p, k] : cur) {
        if (k != 0) clean[p] = k;
      }
      e_[n] = clean;
    }
  }
  const Factorization& operator[](std::uint64_t n) const { return e_.at(n); }
  std::uint64_t n_max() const { return e_.size() - 1; }

 private:
  std::vector<Factorization> e_;
};

// Linear ascent with per-prime deficits: start from the target E(a) + E(b),
// walk c upward subtracting what phi(c!) has gained, stop when nothing is owed.
inline std::uint64_t ascent_c(std::uint64_t a, std::uint64_t b, const PhiFactorials& e) {
  Factorization deficit;
  for (const auto& [p, k] : e[a]) deficit[p] += k;
  for (const auto& [p, k] : e[b]) deficit[p] += k;
  std::int64_t owed_primes = 0;
  for (const auto& [p, k] : deficit) owed_primes += k > 0;
  Factorization prev;
  for (std::uint64_t c = 1; c <= e.n_max(); ++c) {
    const Factorization& cur = e[c];
    for (const auto& [p, k] : cur) {
      const std::int64_t gained = k - (prev.count(p) ? prev.at(p) : 0);
      if (gained == 0) continue;
      auto it = deficit.find(p);
      if (it == deficit.end()) continue;
      const bool was_owed = it->second > 0;
      it->second -= gained;
      if (was_owed && it->second <= 0) --owed_primes;
    }
    prev = cur;
    if (owed_primes == 0) return c;
  }
  return 0;  // not reached within n_max
}

}  // namespace oracle
