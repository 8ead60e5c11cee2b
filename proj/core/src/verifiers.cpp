#include "phifact/verifiers.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "phifact/errors.hpp"
#include "phifact/phi_factorial.hpp"
#include "phifact/valuations.hpp"

namespace phifact {

namespace {

constexpr double kLemma2BandLow = 0.9;
constexpr double kLemma2BandHigh = 1.3;
constexpr std::uint64_t kLemma2GateFrom = 10'000;
constexpr std::uint64_t kLemma6ExhaustiveTo = 10'000;

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

void require_prime(std::uint64_t q, const char* what) {
  if (!is_prime(q)) throw DomainError(std::string(what) + ": " + std::to_string(q) + " is not prime");
}

}  // namespace

VerificationReport check_lemma2_ratio(std::uint64_t q, std::uint64_t x, const PrimeTable& table) {
  require_prime(q, "lemma2");
  if (x < 100) throw DomainError("lemma2 ratio needs x >= 100");
  VerificationReport report("lemma2", {{"q", q}, {"x", x}});

  const std::uint64_t exact = shifted_prime_product_valuation(x, q, table);
  const double qd = static_cast<double>(q);
  const double xd = static_cast<double>(x);
  const double main_term = qd / ((qd - 1) * (qd - 1)) * xd / std::log(xd);
  const double ratio = static_cast<double>(exact) / main_term;
  report.count();
  report.note("valuation=" + std::to_string(exact) + " main_term=" + fixed(main_term, 3) + " ratio=" + fixed(ratio));

  if (x < kLemma2GateFrom) {
    report.note("report only below x=10000 (asymptotic claim)");
    return report;
  }
  report.note("gate band [0.9, 1.3] is an engineering tolerance for an asymptotic estimate");
  if (ratio < kLemma2BandLow || ratio > kLemma2BandHigh) {
    report.fail({{"q", q}, {"x", x}, {"ratio", ratio}});
  }
  return report;
}

VerificationReport check_lemma6(std::uint64_t a_max, std::uint64_t q_max, const PrimeTable& table) {
  if (a_max > table.limit()) {
    throw BoundsError("lemma6 needs primes up to " + std::to_string(a_max) + ", table stops at " +
                      std::to_string(table.limit()));
  }
  VerificationReport report("lemma6", {{"a_max", a_max}, {"q_max", q_max}});

  std::vector<std::uint64_t> grid;
  for (std::uint64_t a = 1; a <= std::min(a_max, kLemma6ExhaustiveTo); ++a) grid.push_back(a);
  for (double a = static_cast<double>(kLemma6ExhaustiveTo) * 1.01; a < static_cast<double>(a_max); a *= 1.01) {
    grid.push_back(static_cast<std::uint64_t>(a));
  }
  if (a_max > kLemma6ExhaustiveTo) grid.push_back(a_max);

  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t slack_a = 0;
  std::uint64_t slack_q = 0;
  for (std::uint32_t q : table.primes()) {
    if (q <= 7) continue;
    if (q > q_max) break;
    const double log_q = std::log(static_cast<double>(q));
    for (std::uint64_t a : grid) {
      const std::uint64_t value = shifted_prime_product_valuation(a + 1, q, table);
      const double ad = static_cast<double>(a);
      const double bound = 0.23 * ad / static_cast<double>(q - 1) + 7.0 * std::log(ad) / log_q;
      report.count();
      if (static_cast<double>(value) > bound) {
        report.fail({{"a", a}, {"q", q}, {"valuation", value}, {"bound", bound}});
      } else if (bound - static_cast<double>(value) < min_slack) {
        min_slack = bound - static_cast<double>(value);
        slack_a = a;
        slack_q = q;
      }
    }
  }
  if (report.checked_count() == 0) {
    report.note("no prime q with 7 < q <= q_max; nothing to check");
  } else if (slack_q != 0) {
    report.note("tightest slack " + fixed(min_slack, 4) + " at a=" + std::to_string(slack_a) +
                " q=" + std::to_string(slack_q));
  }
  return report;
}

VerificationReport check_lemma7(std::uint64_t d, std::uint64_t n_max) {
  if (d <= 7 || gcd(d, 105) != 1) {
    throw DomainError("lemma7 needs d > 7 coprime to 105, got d=" + std::to_string(d));
  }
  VerificationReport report("lemma7", {{"d", d}, {"n", n_max}});
  std::uint64_t primes = 0;
  std::uint64_t worst_gap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= n_max; ++i) {
    primes += is_prime(i * d + 1);
    report.count();
    // count <= 0.46 i + 7, scaled by 100 to stay in integers.
    const std::uint64_t lhs = 100 * primes;
    const std::uint64_t rhs = 46 * i + 700;
    if (lhs > rhs) {
      report.fail({{"d", d}, {"n", i}, {"count", primes}});
    } else {
      worst_gap = std::min(worst_gap, rhs - lhs);
    }
  }
  report.note("primes among id+1, i<=" + std::to_string(n_max) + ": " + std::to_string(primes));
  if (report.passed() && n_max > 0) report.note("tightest margin " + fixed(static_cast<double>(worst_gap) / 100, 2));
  return report;
}

std::uint64_t lemma8_residue_count(std::uint64_t k, std::uint64_t r) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= k; ++i) count += gcd((2 * r * i + 1) % 105, 105) == 1;
  return count;
}

VerificationReport check_lemma8_residues(std::uint64_t k_max) {
  if (k_max < 1) throw DomainError("lemma8 needs k_max >= 1");
  VerificationReport report("lemma8", {{"k_max", k_max}, {"modulus", 105}});
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    for (std::uint64_t r = 0; r < 105; ++r) {
      if (gcd(r, 105) != 1) continue;
      const std::uint64_t count = lemma8_residue_count(k, r);
      report.count();
      if (count > k / 2 + 1) report.fail({{"k", k}, {"r", r}, {"count", count}, {"bound", k / 2 + 1}});
    }
  }
  report.note("counts i<=k with gcd(2ri+1,105)=1, an upper bound on primes among 2qi+1 for prime q>7, q=r mod 105");
  return report;
}

std::uint64_t count_lemma8_direct(std::uint64_t q, std::uint64_t k) {
  if (q <= 7 || !is_prime(q)) throw DomainError("lemma8 needs a prime q > 7, got " + std::to_string(q));
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= k; ++i) count += is_prime(2 * q * i + 1);
  return count;
}

std::pair<std::uint64_t, VerificationReport> construct_prop10_pair(std::uint64_t a, std::uint64_t k) {
  if (a < 1 || k < 1) throw DomainError("prop10 needs a >= 1 and k >= 1");
  std::uint64_t d = 1;
  const PrimeTable sieve(std::max<std::uint64_t>(a, 2));
  for (std::uint32_t p : sieve.primes()) {
    if (p > a) break;
    if (__builtin_mul_overflow(d, std::uint64_t{p} - 1, &d)) {
      throw ArithmeticError("prod_{p<=a}(p-1) overflows 64 bits for a=" + std::to_string(a));
    }
  }
  std::uint64_t kd = 0;
  if (__builtin_mul_overflow(k, d, &kd)) throw ArithmeticError("k * prod_{p<=a}(p-1) overflows 64 bits");
  if (kd <= a) {
    throw DomainError("b = k*D - a = " + std::to_string(kd) + " - " + std::to_string(a) + " is not positive");
  }
  const std::uint64_t b = kd - a;
  VerificationReport report("prop10", {{"a", a}, {"k", k}, {"D", d}, {"b", b}});

  if (b < a) {
    report.note("b < a: outside the construction's hypothesis, not checked");
    return {b, report};
  }
  if (a + b > PhiFactorialTable::kMaxSize) {
    throw BoundsError("a + b = " + std::to_string(a + b) + " too large for a phi-factorial table");
  }

  report.count();
  if ((b + a) % d != 0) report.fail({{"a", a}, {"b", b}, {"check", "b = -a mod D"}});

  const PhiFactorialTable table = build_table(a + b);
  const SignedExponentVec t = t_valuation(a, b, a + b, table);
  report.count();
  if (!is_integral(t)) report.fail({{"a", a}, {"b", b}, {"T", t.to_string()}});

  const PairResult pr = c_of(a, b, table);
  report.count();
  if (pr.r > Rational(1)) report.fail({{"a", a}, {"b", b}, {"c", pr.c}});
  report.note("T(a,b;a+b) = " + t.to_string() + ", c(a,b) = " + std::to_string(pr.c));
  return {b, report};
}

VerificationReport check_phi_identity(std::uint64_t a) {
  if (a < 4 || a > 8) {
    throw BoundsError("phi identity is checked for 4 <= a <= 8 (claimed for a >= 4; phi(8!) = 9216 keeps "
                      "the table small), got a=" + std::to_string(a));
  }
  const PhiFactorialTable small = build_table(a);
  const auto m = to_integer(small.exponents(a));
  VerificationReport report("identity", {{"a", a}, {"phi", *m}});

  const PhiFactorialTable table = build_table(*m);
  const SignedExponentVec t = t_valuation(a, *m - 1, *m, table);
  report.count();
  if (!t.empty()) report.fail({{"a", a}, {"b", *m - 1}, {"c", *m}, {"T", t.to_string()}});

  const PairResult pr = c_of(a, *m - 1, table);
  report.count();
  if (pr.c > *m) report.fail({{"a", a}, {"b", *m - 1}, {"c_of", pr.c}});
  report.note("c(a, phi(a!)-1) = " + std::to_string(pr.c));
  return report;
}

VerificationReport check_floor_identity(std::uint64_t sample_max) {
  VerificationReport report("floor", {{"sample_max", sample_max}});
  if (sample_max < 2) {
    report.note("no primes q <= sample_max");
    return report;
  }
  const PrimeTable sieve(sample_max);
  for (std::uint32_t q : sieve.primes()) {
    for (std::uint64_t a = 0; a <= sample_max; ++a) {
      report.count();
      if (a / (4 * q) != a / (2 * q) / 2) report.fail({{"a", a}, {"q", q}});
    }
  }
  return report;
}

}  // namespace phifact
