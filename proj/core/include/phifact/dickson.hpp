#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "phifact/rational.hpp"
#include "phifact/report.hpp"

namespace phifact {

inline constexpr std::array<std::uint64_t, 3> kWitnessPrimeMultipliers = {2, 6, 8};
inline constexpr std::array<std::uint64_t, 5> kWitnessCompositeMultipliers = {10, 12, 14, 16, 18};

struct DicksonWitness {
  std::uint64_t q = 0;
  std::uint64_t n = 0;  // 8q + 1
  // (i, iq+1 is prime) for i in 2, 6, 8, 10, ..., 18.
  std::vector<std::pair<std::uint64_t, bool>> prime_facts;

  nlohmann::json to_json() const;
};

// q prime, q > 17, iq+1 prime for i in {2,6,8} and composite for i in {10,...,18}.
bool is_dickson_witness(std::uint64_t q);

DicksonWitness make_witness(std::uint64_t q);

enum class WitnessScan {
  Exhaustive,  // every prime q <= limit
  FastLane,    // only q = 54 (mod 77); misses witnesses outside that class
};

std::vector<DicksonWitness> search_witnesses(std::uint64_t limit, std::uint64_t max_count,
                                             WitnessScan mode = WitnessScan::Exhaustive);

// q = 131 checks the explicit arithmetic (263, 787, 1049 prime, 1573 = 11^2 * 13,
// ...); any other q gets the generic witness conditions.
VerificationReport verify_witness_facts(std::uint64_t q = 131);

struct Theorem5Report {
  DicksonWitness witness;
  std::uint64_t c_value = 0;  // c(n,n)
  std::int64_t m = 0;         // c(n,n) - 2n
  Rational bound;             // 9n/4 - 9/4
  bool satisfied = false;     // c_value >= bound
  bool within_upper = false;  // c_value <= 2n + floor(2n/8)

  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultTheorem5QCap = 5000;

// Solves c(n,n) for n = 8q+1 on a table of about 9(2n)/8 entries. Throws
// DomainError if q is not a witness, BoundsError if q exceeds q_cap.
Theorem5Report check_theorem5(std::uint64_t q, std::uint64_t q_cap = kDefaultTheorem5QCap);

}  // namespace phifact
