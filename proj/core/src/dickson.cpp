#include "phifact/dickson.hpp"

#include <limits>
#include <string>

#include "phifact/errors.hpp"
#include "phifact/phi_factorial.hpp"
#include "phifact/primes.hpp"

namespace phifact {

namespace {

constexpr std::uint64_t kMinWitness = 18;  // q > 17
constexpr std::uint64_t kMaxWitnessCandidate = (std::numeric_limits<std::uint64_t>::max() - 1) / 18;

void require_in_range(std::uint64_t q) {
  if (q > kMaxWitnessCandidate) throw BoundsError("18q+1 overflows 64 bits for q=" + std::to_string(q));
}

bool conditions_hold(std::uint64_t q) {
  for (std::uint64_t i : kWitnessPrimeMultipliers) {
    if (!is_prime(i * q + 1)) return false;
  }
  for (std::uint64_t i : kWitnessCompositeMultipliers) {
    if (is_prime(i * q + 1)) return false;
  }
  return true;
}

}  // namespace

nlohmann::json DicksonWitness::to_json() const {
  VerificationReport report("witness", {{"q", q}, {"n", n}});
  nlohmann::json facts = nlohmann::json::object();
  for (const auto& [i, prime] : prime_facts) {
    facts[std::to_string(i)] = prime;
    report.count();
    const bool want_prime = i == 2 || i == 6 || i == 8;
    if (prime != want_prime) report.fail({{"i", i}, {"value", i * q + 1}, {"prime", prime}});
  }
  nlohmann::json j = report.to_json();
  j["prime_facts"] = facts;
  return j;
}

bool is_dickson_witness(std::uint64_t q) {
  require_in_range(q);
  return q >= kMinWitness && is_prime(q) && conditions_hold(q);
}

DicksonWitness make_witness(std::uint64_t q) {
  require_in_range(q);
  DicksonWitness w{q, 8 * q + 1, {}};
  for (std::uint64_t i : kWitnessPrimeMultipliers) w.prime_facts.emplace_back(i, is_prime(i * q + 1));
  for (std::uint64_t i : kWitnessCompositeMultipliers) w.prime_facts.emplace_back(i, is_prime(i * q + 1));
  return w;
}

std::vector<DicksonWitness> search_witnesses(std::uint64_t limit, std::uint64_t max_count, WitnessScan mode) {
  require_in_range(limit);
  std::vector<DicksonWitness> found;
  if (max_count == 0 || limit < kMinWitness) return found;

  if (mode == WitnessScan::FastLane) {
    // q = 54 (mod 77) forces 11 | 12q+1 and 7 | 18q+1.
    for (std::uint64_t q = 54; q <= limit && found.size() < max_count; q += 77) {
      if (q >= kMinWitness && is_prime(q) && conditions_hold(q)) found.push_back(make_witness(q));
    }
    return found;
  }

  if (limit <= PrimeTable::kMaxLimit) {
    const PrimeTable sieve(limit);
    for (std::uint32_t q : sieve.primes()) {
      if (found.size() == max_count) break;
      if (q >= kMinWitness && conditions_hold(q)) found.push_back(make_witness(q));
    }
    return found;
  }
  for (std::uint64_t q = kMinWitness | 1; q <= limit && found.size() < max_count; q += 2) {
    if (is_prime(q) && conditions_hold(q)) found.push_back(make_witness(q));
  }
  return found;
}

VerificationReport verify_witness_facts(std::uint64_t q) {
  require_in_range(q);
  VerificationReport report("witness_facts", {{"q", q}});
  auto fact = [&](bool ok, const std::string& what) {
    report.count();
    if (!ok) report.fail({{"q", q}, {"fact", what}});
  };

  if (q != 131) {
    fact(q >= kMinWitness, "q > 17");
    fact(is_prime(q), "q prime");
    for (std::uint64_t i : kWitnessPrimeMultipliers) {
      fact(is_prime(i * q + 1), std::to_string(i) + "q+1 prime");
    }
    for (std::uint64_t i : kWitnessCompositeMultipliers) {
      fact(!is_prime(i * q + 1), std::to_string(i) + "q+1 composite");
    }
    report.note("generic witness conditions");
    return report;
  }

  fact(2 * q + 1 == 263 && is_prime(263), "2q+1 = 263 prime");
  fact(6 * q + 1 == 787 && is_prime(787), "6q+1 = 787 prime");
  fact(8 * q + 1 == 1049 && is_prime(1049), "8q+1 = 1049 prime");
  fact(12 * q + 1 == 1573 && factorize(1573) == ExponentVec{{11, 2}, {13, 1}}, "12q+1 = 1573 = 11^2 * 13");
  fact(18 * q + 1 == 2359 && factorize(2359) == ExponentVec{{7, 1}, {337, 1}}, "18q+1 = 2359 = 7 * 337");
  fact((10 * q + 1) % 3 == 0 && (16 * q + 1) % 3 == 0, "3 | 10q+1 and 3 | 16q+1");
  fact((14 * q + 1) % 5 == 0, "5 | 14q+1");
  fact(q % 77 == 54, "q = 54 (mod 77)");
  fact(q % 3 == 2, "q = 2 (mod 3)");
  fact(q % 5 == 1, "q = 1 (mod 5)");
  fact(q % 11 == 131 % 11 && q % 7 == 131 % 7, "q = 131 (mod 11) and (mod 7)");
  fact(is_dickson_witness(q), "all witness conditions");
  report.note("explicit arithmetic for q = 131");
  return report;
}

nlohmann::json Theorem5Report::to_json() const {
  VerificationReport report("theorem5", {{"q", witness.q}, {"n", witness.n}});
  report.count();
  if (!satisfied) {
    report.fail({{"q", witness.q}, {"n", witness.n}, {"c", c_value}, {"bound", bound.to_string()}});
  }
  report.note(within_upper ? "c(n,n) <= 2n + floor(2n/8)" : "c(n,n) exceeds 2n + floor(2n/8)");
  nlohmann::json j = report.to_json();
  j["c"] = c_value;
  j["m"] = m;
  j["bound"] = bound.to_string();
  j["r"] = Rational(static_cast<std::int64_t>(c_value), static_cast<std::int64_t>(2 * witness.n)).to_string();
  j["satisfied"] = satisfied;
  j["within_upper"] = within_upper;
  return j;
}

Theorem5Report check_theorem5(std::uint64_t q, std::uint64_t q_cap) {
  if (q > q_cap) {
    throw BoundsError("q=" + std::to_string(q) + " above the cap " + std::to_string(q_cap) +
                      " (raise it to allow a larger table)");
  }
  if (!is_dickson_witness(q)) throw DomainError(std::to_string(q) + " is not a Dickson witness");

  Theorem5Report out;
  out.witness = make_witness(q);
  const std::uint64_t n = out.witness.n;
  PairSolver solver(n);
  const PairResult pr = solver.solve(n, n);
  out.c_value = pr.c;
  out.m = static_cast<std::int64_t>(pr.c) - static_cast<std::int64_t>(2 * n);
  out.bound = Rational(static_cast<std::int64_t>(9 * n - 9), 4);
  out.satisfied = Rational(static_cast<std::int64_t>(pr.c)) >= out.bound;
  out.within_upper = pr.c <= 2 * n + (2 * n) / 8;
  return out;
}

}  // namespace phifact
