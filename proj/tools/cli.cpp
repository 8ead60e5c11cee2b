#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "phifact/dickson.hpp"
#include "phifact/errors.hpp"
#include "phifact/experiments.hpp"
#include "phifact/primes.hpp"
#include "phifact/verifiers.hpp"

namespace phifact::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Options {
  std::string format = "text";
  bool json = false;
  unsigned jobs = 1;

  Format fmt() const {
    if (json || format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

// Writes to --out when given, else to the output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
      return;
    }
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    file_.open(p, std::ios::binary | std::ios::trunc);
    if (!file_) throw DomainError("cannot open " + path + " for writing");
    os_ = &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

nlohmann::json pair_json(const PairResult& pr) {
  return {{"a", pr.a}, {"b", pr.b}, {"sum", pr.a + pr.b}, {"c", pr.c},
          {"r_num", pr.r.num()}, {"r_den", pr.r.den()}, {"r_dec", pr.r.to_decimal(6)}};
}

void emit_report(const VerificationReport& r, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    out << r.to_json_line() << '\n';
    return;
  }
  out << r.claim_id() << ": " << (r.passed() ? "PASS" : "FAIL") << " (checked " << r.checked_count() << ")";
  if (!r.notes().empty()) out << " " << r.notes();
  out << '\n';
  for (const auto& ce : r.counterexamples()) out << "  counterexample " << ce.dump() << '\n';
}

int emit_reports(const std::vector<VerificationReport>& reports, Format fmt, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) {
    emit_report(r, fmt, out);
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

std::filesystem::path cache_path(const std::string& flag, std::uint64_t n) {
  if (!flag.empty()) return flag;
  if (const char* dir = std::getenv("PHIFACT_CACHE"); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / ("pairs_N" + std::to_string(n) + ".csv");
  }
  throw DomainError("no cache path: pass --path or set PHIFACT_CACHE");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Least c with phi(a!) phi(b!) | phi(c!), and checks of the surrounding finite claims", "phifact"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--json", opt.json, "Shorthand for --format json");
  app.add_option("--jobs", opt.jobs, "Worker threads for scans")->check(CLI::Range(1u, 1024u))->capture_default_str();

  std::function<int()> action;

  // pair
  std::uint64_t pair_a = 0;
  std::uint64_t pair_b = 0;
  auto* pair = app.add_subcommand("pair", "Solve c(a,b) and r(a,b)");
  pair->add_option("a", pair_a)->required()->check(CLI::PositiveNumber);
  pair->add_option("b", pair_b)->required()->check(CLI::PositiveNumber);
  pair->callback([&] {
    action = [&] {
      PairSolver solver(std::max(pair_a, pair_b));
      const PairResult pr = solver.solve(pair_a, pair_b);
      switch (opt.fmt()) {
        case Format::Json: out << pair_json(pr).dump() << '\n'; break;
        case Format::Csv: write_pairs_csv(out, {pr}); break;
        case Format::Text:
          out << "c=" << pr.c << " r=" << pr.r.to_string() << " (" << pr.r.to_decimal(6) << ")\n";
          break;
      }
      return kExitOk;
    };
  });

  // table1
  std::vector<std::uint64_t> t1_n{100};
  bool t1_unordered = false;
  auto* table1 = app.add_subcommand("table1", "Proportion of pairs in [1,N]^2 with r(a,b) > 1");
  table1->add_option("--n", t1_n, "One or more N (comma separated)")->delimiter(',')->check(CLI::PositiveNumber);
  table1->add_flag("--unordered", t1_unordered, "Count a <= b only");
  table1->callback([&] {
    action = [&] {
      const auto rows = table1_proportions(t1_n, t1_unordered ? PairOrder::Unordered : PairOrder::Ordered, opt.jobs);
      if (opt.fmt() == Format::Json) {
        for (const auto& row : rows) {
          out << nlohmann::json{{"N", row.n}, {"count_gt", row.count_gt}, {"total", row.total},
                                {"proportion", row.proportion.to_decimal(3)},
                                {"proportion_exact", row.proportion.to_string()}}
                     .dump()
              << '\n';
        }
      } else {
        write_table1_csv(out, rows);
      }
      return kExitOk;
    };
  });

  // fig1 / fig2
  std::uint64_t fig1_n = 100;
  std::string fig_out;
  auto* fig1 = app.add_subcommand("fig1", "c(a,b) for all 1 <= a, b <= N");
  fig1->add_option("--n", fig1_n)->check(CLI::PositiveNumber)->capture_default_str();
  fig1->add_option("--out", fig_out, "CSV path (default: stdout)");
  fig1->callback([&] {
    action = [&] {
      const auto rows = figure1_data(fig1_n, opt.jobs);
      Sink sink(fig_out, out);
      if (opt.fmt() == Format::Json) {
        for (const auto& pr : rows) sink.os() << pair_json(pr).dump() << '\n';
      } else {
        write_pairs_csv(sink.os(), rows);
      }
      return kExitOk;
    };
  });

  std::uint64_t fig2_max = 500;
  auto* fig2 = app.add_subcommand("fig2", "r(n,n) for 1 <= n <= max");
  fig2->add_option("--max", fig2_max)->check(CLI::PositiveNumber)->capture_default_str();
  fig2->add_option("--out", fig_out, "CSV path (default: stdout)");
  fig2->callback([&] {
    action = [&] {
      const auto rows = figure2_data(fig2_max, opt.jobs);
      Sink sink(fig_out, out);
      if (opt.fmt() == Format::Json) {
        for (const auto& pr : rows) {
          sink.os() << nlohmann::json{{"n", pr.a}, {"c", pr.c}, {"r_num", pr.r.num()}, {"r_den", pr.r.den()},
                                      {"r_dec", pr.r.to_decimal(6)}}
                           .dump()
                    << '\n';
        }
      } else {
        write_figure2_csv(sink.os(), rows);
      }
      return kExitOk;
    };
  });

  // verify
  std::string claim;
  std::uint64_t v_q = 2;
  std::uint64_t v_x = 1'000'000;
  std::uint64_t v_a_max = 100'000;
  std::uint64_t v_q_max = 50;
  std::uint64_t v_d = 0;
  std::uint64_t v_d_max = 1000;
  std::uint64_t v_n = 500;
  std::uint64_t v_k_max = 173;
  std::vector<std::uint64_t> v_a;
  std::vector<std::uint64_t> v_k{2, 3, 4};
  std::uint64_t v_sample_max = 10'000;
  auto* verify = app.add_subcommand("verify", "Run one of the finite checks");
  verify->add_option("claim", claim)
      ->required()
      ->check(CLI::IsMember({"lemma2", "lemma6", "lemma7", "lemma8", "prop10", "identity", "floor"}));
  verify->add_option("--q", v_q, "lemma2: prime q")->capture_default_str();
  verify->add_option("--x", v_x, "lemma2: x")->capture_default_str();
  verify->add_option("--a-max", v_a_max, "lemma6: largest a")->capture_default_str();
  verify->add_option("--q-max", v_q_max, "lemma6: largest q")->capture_default_str();
  verify->add_option("--d", v_d, "lemma7: a single modulus d (default: sweep)");
  verify->add_option("--d-max", v_d_max, "lemma7: sweep every d in (7, d_max] coprime to 105")->capture_default_str();
  verify->add_option("--n", v_n, "lemma7: progression length")->capture_default_str();
  verify->add_option("--k-max", v_k_max, "lemma8: largest k")->capture_default_str();
  verify->add_option("--a", v_a, "prop10/identity: a (identity default: 4,5,6,7)")->delimiter(',');
  verify->add_option("--k", v_k, "prop10: multipliers k")->delimiter(',')->capture_default_str();
  verify->add_option("--sample-max", v_sample_max, "floor: sweep bound")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      std::vector<VerificationReport> reports;
      if (claim == "lemma2") {
        reports.push_back(check_lemma2_ratio(v_q, v_x, sieve_primes(std::max<std::uint64_t>(v_x, 2))));
      } else if (claim == "lemma6") {
        reports.push_back(check_lemma6(v_a_max, v_q_max, sieve_primes(std::max<std::uint64_t>(v_a_max + 1, 2))));
      } else if (claim == "lemma7") {
        if (v_d != 0) {
          reports.push_back(check_lemma7(v_d, v_n));
        } else {
          VerificationReport sweep("lemma7", {{"d_max", v_d_max}, {"n", v_n}});
          for (std::uint64_t d = 8; d <= v_d_max; ++d) {
            if (gcd(d, 105) == 1) sweep.absorb(check_lemma7(d, v_n));
          }
          reports.push_back(sweep);
        }
      } else if (claim == "lemma8") {
        reports.push_back(check_lemma8_residues(v_k_max));
      } else if (claim == "prop10") {
        for (std::uint64_t a : v_a.empty() ? std::vector<std::uint64_t>{5} : v_a) {
          for (std::uint64_t k : v_k) reports.push_back(construct_prop10_pair(a, k).second);
        }
      } else if (claim == "identity") {
        for (std::uint64_t a : v_a.empty() ? std::vector<std::uint64_t>{4, 5, 6, 7} : v_a) {
          reports.push_back(check_phi_identity(a));
        }
      } else {
        reports.push_back(check_floor_identity(v_sample_max));
      }
      return emit_reports(reports, opt.fmt(), out);
    };
  });

  // dickson
  std::uint64_t d_limit = 10'000;
  std::uint64_t d_max_count = 100;
  bool d_fast = false;
  std::uint64_t d_q = 131;
  std::uint64_t d_q_cap = kDefaultTheorem5QCap;
  auto* dickson = app.add_subcommand("dickson", "Witness primes and the r(n,n) lower bound at n = 8q+1");
  dickson->require_subcommand(1, 1);
  auto* d_search = dickson->add_subcommand("search", "List witnesses q <= limit");
  d_search->add_option("--limit", d_limit)->capture_default_str();
  d_search->add_option("--max-count", d_max_count)->capture_default_str();
  d_search->add_flag("--fast", d_fast, "Only scan q = 54 (mod 77)");
  d_search->callback([&] {
    action = [&] {
      const auto ws = search_witnesses(d_limit, d_max_count, d_fast ? WitnessScan::FastLane : WitnessScan::Exhaustive);
      for (const auto& w : ws) {
        if (opt.fmt() == Format::Json) {
          out << w.to_json().dump() << '\n';
        } else {
          out << "q=" << w.q << " n=" << w.n << '\n';
        }
      }
      return kExitOk;
    };
  });
  auto* d_check = dickson->add_subcommand("check", "Witness facts and c(n,n) >= 9n/4 - 9/4");
  d_check->add_option("--q", d_q)->capture_default_str();
  d_check->add_option("--q-cap", d_q_cap, "Refuse witnesses above this (table size guard)")->capture_default_str();
  d_check->callback([&] {
    action = [&] {
      const VerificationReport facts = verify_witness_facts(d_q);
      if (!facts.passed()) {
        emit_report(facts, opt.fmt(), out);
        return kExitVerificationFailed;
      }
      const Theorem5Report t5 = check_theorem5(d_q, d_q_cap);
      if (opt.fmt() == Format::Json) {
        out << facts.to_json_line() << '\n' << t5.to_json().dump() << '\n';
      } else {
        emit_report(facts, opt.fmt(), out);
        const Rational r(static_cast<std::int64_t>(t5.c_value), static_cast<std::int64_t>(2 * t5.witness.n));
        out << "theorem5: " << (t5.satisfied ? "PASS" : "FAIL") << " q=" << d_q << " n=" << t5.witness.n
            << " c=" << t5.c_value << " m=" << t5.m << " bound=" << t5.bound << " r=" << r << " ("
            << r.to_decimal(6) << ")" << (t5.within_upper ? "" : " [above 2n+floor(2n/8)]") << '\n';
      }
      return t5.satisfied ? kExitOk : kExitVerificationFailed;
    };
  });

  // scan
  std::string scan_kind;
  std::uint64_t s_min = 100;
  std::uint64_t s_max = 300;
  std::string s_out;
  auto* scan = app.add_subcommand("scan", "Range scans: theorem2 ceiling or lower-bound summary");
  scan->add_option("kind", scan_kind)->required()->check(CLI::IsMember({"theorem2", "lower"}));
  scan->add_option("--min", s_min)->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--max", s_max)->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--out", s_out, "CSV path for the lower-bound summary (default: stdout)");
  scan->callback([&] {
    action = [&] {
      if (scan_kind == "theorem2") {
        const Theorem2Scan result = scan_theorem2(s_min, s_max, opt.jobs);
        return emit_reports({result.report}, opt.fmt(), out);
      }
      const auto rows = scan_lower_bound(s_min, s_max, opt.jobs);
      Sink sink(s_out, out);
      if (opt.fmt() == Format::Json) {
        for (const auto& row : rows) {
          sink.os() << nlohmann::json{{"b", row.b}, {"min_delta", row.min_delta}, {"a_at_min", row.a_at_min}}.dump()
                    << '\n';
        }
      } else {
        write_lower_bound_csv(sink.os(), rows);
      }
      return kExitOk;
    };
  });

  // cache
  std::string cache_op;
  std::string c_path;
  std::uint64_t c_n = 100;
  bool c_strict = false;
  auto* cache = app.add_subcommand("cache", "Persist and re-check pair results");
  cache->add_option("op", cache_op)->required()->check(CLI::IsMember({"store", "load", "verify"}));
  cache->add_option("--path", c_path, "CSV file (default: $PHIFACT_CACHE/pairs_N<n>.csv)");
  cache->add_option("--n", c_n, "store: pair range [1,n]^2")->check(CLI::PositiveNumber)->capture_default_str();
  cache->add_flag("--strict", c_strict, "verify: re-check every row instead of a sample");
  cache->callback([&] {
    action = [&] {
      const auto path = cache_path(c_path, c_n);
      if (cache_op == "store") {
        const auto rows = figure1_data(c_n, opt.jobs);
        cache_store(path, rows);
        if (opt.fmt() == Format::Json) {
          out << nlohmann::json{{"path", path.string()}, {"rows", rows.size()}}.dump() << '\n';
        } else {
          out << "stored " << rows.size() << " rows in " << path.string() << '\n';
        }
        return kExitOk;
      }
      const auto rows = cache_load(path);
      if (cache_op == "load") {
        if (opt.fmt() == Format::Json) {
          for (const auto& pr : rows) out << pair_json(pr).dump() << '\n';
        } else {
          write_pairs_csv(out, rows);
        }
        return kExitOk;
      }
      return emit_reports({verify_pair_rows(rows, c_strict ? CacheCheck::Strict : CacheCheck::Spot)}, opt.fmt(), out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "phifact: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const TableExhausted& e) {
    err << "phifact: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "phifact: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "phifact: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace phifact::cli
