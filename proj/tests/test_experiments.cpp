#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "phifact/errors.hpp"
#include "phifact/experiments.hpp"
#include "support/oracles.hpp"

using namespace phifact;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "phifact_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("rational rendering") {
  CHECK(Rational(8, 11).to_decimal(6) == "0.727273");
  CHECK(Rational(1, 2).to_decimal(0) == "0");   // tie to even
  CHECK(Rational(3, 2).to_decimal(0) == "2");
  CHECK(Rational(1, 8).to_decimal(2) == "0.12");  // 0.125 -> even
  CHECK(Rational(3, 8).to_decimal(2) == "0.38");
  CHECK(Rational(617, 2500).to_decimal(3) == "0.247");
  CHECK(Rational(-1, 3).to_decimal(3) == "-0.333");
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(9, 8) - Rational(9, 8392) == Rational(1179, 1049));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("table1 degenerate and small ranges") {
  const auto rows = table1_proportions({1});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].count_gt == 0);
  CHECK(rows[0].total == 1);
  CHECK(rows[0].proportion.to_decimal(3) == "0.000");
  CHECK_THROWS_AS(table1_proportions({0}), DomainError);
  CHECK(table1_proportions({}).empty());
}

TEST_CASE("table1 agrees with brute force for small N") {
  const oracle::PhiFactorials e(200);
  for (std::uint64_t n : {5, 17, 40}) {
    std::uint64_t ordered = 0;
    std::uint64_t unordered = 0;
    for (std::uint64_t a = 1; a <= n; ++a) {
      for (std::uint64_t b = 1; b <= n; ++b) {
        const bool gt = oracle::ascent_c(a, b, e) > a + b;
        ordered += gt;
        unordered += gt && a <= b;
      }
    }
    CHECK(table1_proportions({n})[0].count_gt == ordered);
    CHECK(table1_proportions({n}, PairOrder::Unordered)[0].count_gt == unordered);
  }
}

TEST_CASE("table1 N = 100 and N = 200 counts") {
  // Frozen from an independent big-integer computation (phi(n!) as an exact
  // integer, divisibility by remainder): 2468 of 10000 ordered pairs.
  const auto rows = table1_proportions({100, 200});
  CHECK(rows[0].count_gt == 2468);
  CHECK(rows[0].total == 10'000);
  CHECK(rows[0].proportion.to_decimal(3) == "0.247");
  CHECK(rows[1].count_gt == 25'595);
  CHECK(rows[1].total == 40'000);
  const auto unordered = table1_proportions({100}, PairOrder::Unordered);
  CHECK(unordered[0].count_gt == 1249);
  CHECK(unordered[0].total == 5050);
  CHECK(table1_proportions({100}, PairOrder::Ordered, 3)[0].count_gt == 2468);
}

TEST_CASE("all-pairs dataset") {
  const auto rows = figure1_data(100);
  CHECK(rows.size() == 10'000);
  CHECK(rows.front().a == 1);
  CHECK(rows.front().b == 1);
  CHECK(rows.front().c == 1);
  const auto& p47 = rows[3 * 100 + 6];
  CHECK(p47.a == 4);
  CHECK(p47.b == 7);
  CHECK(p47.c == 8);
  std::ostringstream one;
  std::ostringstream four;
  write_pairs_csv(one, rows);
  write_pairs_csv(four, figure1_data(100, 4));
  CHECK(one.str() == four.str());
  CHECK(one.str().rfind("a,b,sum,c,r_num,r_den,r_dec\n1,1,2,1,1,2,0.500000\n", 0) == 0);
  CHECK(one.str().find("\n4,7,11,8,8,11,0.727273\n") != std::string::npos);
}

TEST_CASE("diagonal dataset") {
  const auto rows = figure2_data(300);
  REQUIRE(rows.size() == 300);
  CHECK(rows[0].c == 1);
  CHECK(rows[0].r == Rational(1, 2));
  std::ostringstream a;
  std::ostringstream b;
  write_figure2_csv(a, rows);
  write_figure2_csv(b, figure2_data(300, 2));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n,c,r_num,r_den,r_dec\n1,1,1,2,0.500000\n", 0) == 0);
  // the series is not monotone
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    up |= rows[i].r > rows[i - 1].r;
    down |= rows[i].r < rows[i - 1].r;
  }
  CHECK(up);
  CHECK(down);
}

TEST_CASE("upper bound scan") {
  const auto scan = scan_theorem2(100, 160);
  CHECK(scan.report.checked_count() == 61 * 62 / 2);
  CHECK(scan.report.passed());
  CHECK(scan.max_ratio.r <= Rational(9, 8));
  const auto tiny = scan_theorem2(1, 20);
  CHECK(tiny.report.checked_count() == 210);
  CHECK(tiny.report.passed() == tiny.report.counterexamples().empty());
  CHECK_THROWS_AS(scan_theorem2(10, 5), DomainError);
}

TEST_CASE("lower bound scan") {
  const auto rows = scan_lower_bound(2, 100);
  REQUIRE(rows.size() == 99);
  CHECK(rows[0].b == 2);
  const auto& b7 = rows[5];
  CHECK(b7.b == 7);
  CHECK(b7.min_delta <= -3);
  std::ostringstream os;
  write_lower_bound_csv(os, rows);
  CHECK(os.str().rfind("b,min_delta,a_at_min\n", 0) == 0);
  CHECK_THROWS_AS(scan_lower_bound(1, 10), DomainError);
}

TEST_CASE("cache round trip and strict reload") {
  const auto rows = figure1_data(100);
  const auto path = scratch("fig1.csv");
  cache_store(path, rows);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  const auto loaded = cache_load(path);
  CHECK(loaded == rows);
  const auto strict = verify_pair_rows(loaded, CacheCheck::Strict);
  CHECK(strict.passed());
  CHECK(strict.checked_count() == 10'000);
  const auto spot = verify_pair_rows(loaded, CacheCheck::Spot);
  CHECK(spot.passed());
  CHECK(spot.checked_count() == 100);
}

TEST_CASE("cache verification catches a wrong c") {
  auto rows = figure1_data(30);
  rows[40].c += 1;
  rows[40].r = Rational(static_cast<std::int64_t>(rows[40].c), static_cast<std::int64_t>(rows[40].a + rows[40].b));
  const auto r = verify_pair_rows(rows, CacheCheck::Strict);
  CHECK_FALSE(r.passed());
  CHECK(r.counterexamples().at(0).at("row") == 41);
  CHECK(r.counterexamples().at(0).at("minimal") == false);
}

TEST_CASE("pairs CSV parse errors") {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_pairs_csv(is);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("a,b,c\n"), ParseError);
  CHECK(parse("a,b,sum,c,r_num,r_den,r_dec\n4,7,11,8,8,11,0.727273\n").size() == 1);
  try {
    parse("a,b,sum,c,r_num,r_den,r_dec\n4,7,11,8,8,11,0.727273\n4,7,12,8,8,11,0.727273\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("a,b,sum,c,r_num,r_den,r_dec\n4,7,11,8,16,22,0.727273\n"), ParseError);
  CHECK_THROWS_AS(parse("a,b,sum,c,r_num,r_den,r_dec\n4,7,11,8,8,11,0.7273\n"), ParseError);
  CHECK_THROWS_AS(parse("a,b,sum,c,r_num,r_den,r_dec\n4,7,11,x,8,11,0.727273\n"), ParseError);
  CHECK_THROWS_AS(parse("a,b,sum,c,r_num,r_den,r_dec\n4,7,11,8,8,11\n"), ParseError);
}

TEST_CASE("scan config validation") {
  ScanConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n_min = 10;
  cfg.n_max = 5;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}
