#include <doctest.h>

#include "phifact/errors.hpp"
#include "phifact/primes.hpp"
#include "phifact/verifiers.hpp"
#include "support/oracles.hpp"

using namespace phifact;

namespace {

const PrimeTable& million() {
  static const PrimeTable table = sieve_primes(1'000'000);
  return table;
}

void check_report_shape(const VerificationReport& r) {
  const auto j = nlohmann::json::parse(r.to_json_line());
  CHECK(j.at("claim_id") == r.claim_id());
  CHECK(j.at("passed") == r.passed());
  CHECK(j.at("checked_count") == r.checked_count());
  CHECK(j.at("counterexamples").size() == r.counterexamples().size());
  CHECK(j.contains("parameters"));
  CHECK(j.contains("notes"));
  CHECK(r.passed() == r.counterexamples().empty());
}

}  // namespace

TEST_CASE("report bookkeeping") {
  VerificationReport r("demo", {{"x", 1}});
  CHECK(r.passed());
  r.count(3);
  for (int i = 0; i < 100; ++i) r.fail({{"i", i}});
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 100);
  CHECK(r.counterexamples().size() == VerificationReport::kMaxListed);
  check_report_shape(r);
  CHECK(r.to_json().at("notes").get<std::string>().find("100 failures") != std::string::npos);

  VerificationReport ok("demo");
  ok.count();
  ok.absorb(r);
  CHECK(ok.checked_count() == 4);
  CHECK_FALSE(ok.passed());
}

TEST_CASE("shifted prime valuation against 2x/ln x") {
  const auto r2 = check_lemma2_ratio(2, 1'000'000, million());
  CHECK(r2.passed());
  CHECK(r2.checked_count() == 1);
  check_report_shape(r2);
  const auto r3 = check_lemma2_ratio(3, 1'000'000, million());
  CHECK(r3.passed());
  const auto small = check_lemma2_ratio(2, 100, million());
  CHECK(small.passed());
  CHECK(small.notes().find("report only") != std::string::npos);
  CHECK_THROWS_AS(check_lemma2_ratio(4, 1000, million()), DomainError);
  CHECK_THROWS_AS(check_lemma2_ratio(2, 50, million()), DomainError);
}

TEST_CASE("shifted prime valuation bound for 7 < q <= 50") {
  const auto big = check_lemma6(100'000, 50, million());
  CHECK(big.passed());
  CHECK(big.checked_count() > 10'000 * 11);
  const auto small = check_lemma6(100, 11, million());
  CHECK(small.passed());
  CHECK(small.checked_count() == 100);
  const auto none = check_lemma6(100, 7, million());
  CHECK(none.passed());
  CHECK(none.checked_count() == 0);
  CHECK_THROWS_AS(check_lemma6(2'000'000, 50, million()), BoundsError);
}

TEST_CASE("primes in id+1 stay below 0.46n+7") {
  CHECK(check_lemma7(22, 100).passed());
  const auto r = check_lemma7(11, 10);
  CHECK(r.passed());
  CHECK(r.checked_count() == 10);
  CHECK_THROWS_AS(check_lemma7(15, 10), DomainError);
  CHECK_THROWS_AS(check_lemma7(4, 10), DomainError);
}

TEST_CASE("mod 105 residue counts") {
  const auto r = check_lemma8_residues(173);
  CHECK(r.passed());
  CHECK(r.checked_count() == 173 * 48);
  check_report_shape(r);
  for (std::uint64_t res = 0; res < 105; ++res) {
    if (gcd(res, 105) == 1) CHECK(lemma8_residue_count(1, res) <= 1);
  }
  CHECK(lemma8_residue_count(4, 11) == 3);
}

TEST_CASE("direct prime counts among 2qi+1") {
  CHECK(count_lemma8_direct(11, 4) == 3);
  CHECK(count_lemma8_direct(11, 1) == 1);
  CHECK(count_lemma8_direct(13, 4) == 2);
  CHECK_THROWS_AS(count_lemma8_direct(7, 4), DomainError);
  CHECK_THROWS_AS(count_lemma8_direct(15, 4), DomainError);
}

TEST_CASE("the residue count bounds the direct count") {
  const auto table = sieve_primes(10'000);
  for (std::uint32_t q : table.primes()) {
    if (q <= 7) continue;
    for (std::uint64_t k = 1; k <= 60; ++k) {
      REQUIRE(count_lemma8_direct(q, k) <= lemma8_residue_count(k, q % 105));
    }
  }
}

TEST_CASE("pairs with integral T(a,b;a+b)") {
  const auto [b2, r2] = construct_prop10_pair(5, 2);
  CHECK(b2 == 11);
  CHECK(r2.passed());
  CHECK(r2.checked_count() > 0);
  const auto [b3, r3] = construct_prop10_pair(5, 3);
  CHECK(b3 == 19);
  CHECK(r3.passed());
  const auto [b1, r1] = construct_prop10_pair(1, 5);
  CHECK(b1 == 4);
  CHECK(r1.passed());
  CHECK_THROWS_AS(construct_prop10_pair(1, 1), DomainError);
  const auto [bsmall, rsmall] = construct_prop10_pair(7, 1);  // D = 48, b = 41 >= 7
  CHECK(rsmall.passed());
  CHECK((bsmall + 7) % 48 == 0);
  for (std::uint64_t a = 1; a <= 9; ++a) {
    std::uint64_t d = 1;
    for (std::uint64_t p = 2; p <= a; ++p) {
      if (oracle::is_prime(p)) d *= p - 1;
    }
    for (std::uint64_t k = 1; k <= 3; ++k) {
      if (k * d <= a) continue;
      const auto [b, r] = construct_prop10_pair(a, k);
      CHECK((b + a) % d == 0);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("phi identity") {
  const std::uint64_t phis[] = {8, 32, 192, 1152, 9216};
  for (std::uint64_t a = 4; a <= 8; ++a) {
    const auto r = check_phi_identity(a);
    CHECK(r.passed());
    CHECK(r.parameters().at("phi") == phis[a - 4]);
    CHECK(phis[a - 4] == oracle::totient(oracle::factorial(a)));
  }
  CHECK_THROWS_AS(check_phi_identity(3), BoundsError);
  CHECK_THROWS_AS(check_phi_identity(9), BoundsError);
}

TEST_CASE("floor identity") {
  CHECK(100 / (4 * 3) == 8);
  CHECK(100 / (2 * 3) / 2 == 8);
  const auto r = check_floor_identity(10'000);
  CHECK(r.passed());
  CHECK(r.checked_count() == 1229ULL * 10'001ULL);
  CHECK(check_floor_identity(1).checked_count() == 0);
}
