#include "phifact/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "parallel.hpp"
#include "phifact/errors.hpp"

namespace phifact {

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// Solves every pair against one shared table; if any worker runs off the end
// of the table, the table is regrown and the whole batch is solved again.
std::vector<PairResult> solve_pairs(const std::vector<Pair>& pairs, unsigned jobs) {
  std::uint64_t bound = 1;
  for (const auto& [a, b] : pairs) bound = std::max({bound, a, b});
  PairSolver solver(bound);
  std::vector<PairResult> out(pairs.size());
  for (;;) {
    std::atomic<std::uint64_t> needed{0};
    const PhiFactorialTable& table = solver.table();
    detail::parallel_slices(pairs.size(), jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        try {
          out[i] = c_of(pairs[i].first, pairs[i].second, table);
        } catch (const TableExhausted& e) {
          std::uint64_t seen = needed.load();
          while (seen < e.lower_bound() && !needed.compare_exchange_weak(seen, e.lower_bound())) {
          }
          return;
        }
      }
    });
    if (needed.load() == 0) return out;
    solver.ensure(bound, std::max(needed.load(), 2 * table.n_max()));
  }
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

void ScanConfig::validate() const {
  if (n_min < 1 || n_min > n_max) throw DomainError("scan range needs 1 <= n_min <= n_max");
  if (parallelism < 1) throw DomainError("parallelism must be at least 1");
}

std::vector<Table1Row> table1_proportions(const std::vector<std::uint64_t>& n_values, PairOrder order,
                                          unsigned jobs) {
  std::uint64_t top = 0;
  for (std::uint64_t n : n_values) {
    if (n < 1) throw DomainError("table1 needs N >= 1");
    top = std::max(top, n);
  }
  if (n_values.empty()) return {};

  // c(a,b) = c(b,a), so only a <= b is solved; ordered counts weight a != b twice.
  std::vector<Pair> pairs;
  pairs.reserve(top * (top + 1) / 2);
  for (std::uint64_t b = 1; b <= top; ++b) {
    for (std::uint64_t a = 1; a <= b; ++a) pairs.emplace_back(a, b);
  }
  const std::vector<PairResult> results = solve_pairs(pairs, jobs);

  // exceed_by_b[b] = weighted count of exceeding pairs whose larger entry is b.
  std::vector<std::uint64_t> exceed_by_b(top + 1, 0);
  for (const PairResult& pr : results) {
    if (pr.r > Rational(1)) exceed_by_b[pr.b] += (order == PairOrder::Ordered && pr.a != pr.b) ? 2 : 1;
  }
  std::vector<Table1Row> rows;
  for (std::uint64_t n : n_values) {
    Table1Row row;
    row.n = n;
    for (std::uint64_t b = 1; b <= n; ++b) row.count_gt += exceed_by_b[b];
    row.total = order == PairOrder::Ordered ? n * n : n * (n + 1) / 2;
    row.proportion = Rational(as_signed(row.count_gt), as_signed(row.total));
    rows.push_back(row);
  }
  return rows;
}

std::vector<PairResult> figure1_data(std::uint64_t n, unsigned jobs) {
  if (n < 1) throw DomainError("figure1 needs N >= 1");
  std::vector<Pair> pairs;
  pairs.reserve(n * n);
  for (std::uint64_t a = 1; a <= n; ++a) {
    for (std::uint64_t b = 1; b <= n; ++b) pairs.emplace_back(a, b);
  }
  return solve_pairs(pairs, jobs);
}

std::vector<PairResult> figure2_data(std::uint64_t n_max, unsigned jobs) {
  if (n_max < 1) throw DomainError("figure2 needs n_max >= 1");
  std::vector<Pair> pairs;
  for (std::uint64_t n = 1; n <= n_max; ++n) pairs.emplace_back(n, n);
  return solve_pairs(pairs, jobs);
}

Theorem2Scan scan_theorem2(std::uint64_t n_min, std::uint64_t n_max, unsigned jobs) {
  if (n_min < 1 || n_min > n_max) throw DomainError("theorem2 scan needs 1 <= n_min <= n_max");
  std::vector<Pair> pairs;
  for (std::uint64_t a = n_min; a <= n_max; ++a) {
    for (std::uint64_t b = a; b <= n_max; ++b) pairs.emplace_back(a, b);
  }
  const std::vector<PairResult> results = solve_pairs(pairs, jobs);

  Theorem2Scan scan{VerificationReport("theorem2", {{"n_min", n_min}, {"n_max", n_max}}), results.front(), {}};
  std::optional<PairResult> smallest_violation;
  for (const PairResult& pr : results) {
    const std::uint64_t sum = pr.a + pr.b;
    const std::uint64_t ceiling = sum + sum / 8;
    scan.report.count();
    if (pr.c > ceiling) {
      scan.report.fail({{"a", pr.a}, {"b", pr.b}, {"c", pr.c}, {"ceiling", ceiling}});
      if (!smallest_violation || std::pair(sum, pr.a) < std::pair(smallest_violation->a + smallest_violation->b,
                                                                  smallest_violation->a)) {
        smallest_violation = pr;
      }
    }
    if (pr.r > scan.max_ratio.r) scan.max_ratio = pr;
    if (sum >= 400 && (!scan.max_ratio_large || pr.r > scan.max_ratio_large->r)) scan.max_ratio_large = pr;
  }
  auto describe = [](const PairResult& pr) {
    return "(" + std::to_string(pr.a) + "," + std::to_string(pr.b) + ") c=" + std::to_string(pr.c) +
           " r=" + pr.r.to_string() + " (" + pr.r.to_decimal(6) + ")";
  };
  scan.report.note("max r " + describe(scan.max_ratio));
  if (scan.max_ratio_large) scan.report.note("max r with a+b>=400 " + describe(*scan.max_ratio_large));
  if (smallest_violation) scan.report.note("smallest violating pair " + describe(*smallest_violation));
  return scan;
}

std::vector<LowerBoundRow> scan_lower_bound(std::uint64_t n_min, std::uint64_t n_max, unsigned jobs) {
  if (n_min < 2 || n_min > n_max) throw DomainError("lower-bound scan needs 2 <= n_min <= n_max");
  std::vector<Pair> pairs;
  for (std::uint64_t b = n_min; b <= n_max; ++b) {
    for (std::uint64_t a = 1; a <= b; ++a) pairs.emplace_back(a, b);
  }
  const std::vector<PairResult> results = solve_pairs(pairs, jobs);
  std::vector<LowerBoundRow> rows;
  for (const PairResult& pr : results) {
    const std::int64_t delta = as_signed(pr.c) - as_signed(pr.a + pr.b);
    if (rows.empty() || rows.back().b != pr.b) {
      rows.push_back({pr.b, delta, pr.a});
    } else if (delta < rows.back().min_delta) {
      rows.back().min_delta = delta;
      rows.back().a_at_min = pr.a;
    }
  }
  return rows;
}

void write_pairs_csv(std::ostream& os, const std::vector<PairResult>& rows) {
  os << kPairsHeader << '\n';
  for (const PairResult& pr : rows) {
    os << pr.a << ',' << pr.b << ',' << pr.a + pr.b << ',' << pr.c << ',' << pr.r.num() << ',' << pr.r.den() << ','
       << pr.r.to_decimal(6) << '\n';
  }
}

void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows) {
  os << kTable1Header << '\n';
  for (const Table1Row& row : rows) {
    os << row.n << ',' << row.count_gt << ',' << row.total << ',' << row.proportion.to_decimal(3) << '\n';
  }
}

void write_figure2_csv(std::ostream& os, const std::vector<PairResult>& rows) {
  os << kFigure2Header << '\n';
  for (const PairResult& pr : rows) {
    os << pr.a << ',' << pr.c << ',' << pr.r.num() << ',' << pr.r.den() << ',' << pr.r.to_decimal(6) << '\n';
  }
}

void write_lower_bound_csv(std::ostream& os, const std::vector<LowerBoundRow>& rows) {
  os << kLowerBoundHeader << '\n';
  for (const LowerBoundRow& row : rows) os << row.b << ',' << row.min_delta << ',' << row.a_at_min << '\n';
}

namespace {

template <typename Int>
Int parse_field(std::string_view field, std::size_t line, const char* name) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(std::string("bad ") + name + " field '" + std::string(field) + "'", line);
  }
  return value;
}

}  // namespace

std::vector<PairResult> read_pairs_csv(std::istream& is) {
  std::string text;
  std::size_t line_no = 1;
  if (!std::getline(is, text)) throw ParseError("empty input, expected header", line_no);
  if (text != kPairsHeader) throw ParseError("header mismatch: '" + text + "'", line_no);

  std::vector<PairResult> rows;
  while (std::getline(is, text)) {
    ++line_no;
    if (text.empty() && is.peek() == std::char_traits<char>::eof()) break;
    std::vector<std::string_view> fields;
    std::string_view rest(text);
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 7) {
      throw ParseError("expected 7 fields, got " + std::to_string(fields.size()), line_no);
    }
    PairResult pr;
    pr.a = parse_field<std::uint64_t>(fields[0], line_no, "a");
    pr.b = parse_field<std::uint64_t>(fields[1], line_no, "b");
    const auto sum = parse_field<std::uint64_t>(fields[2], line_no, "sum");
    pr.c = parse_field<std::uint64_t>(fields[3], line_no, "c");
    const auto num = parse_field<std::int64_t>(fields[4], line_no, "r_num");
    const auto den = parse_field<std::int64_t>(fields[5], line_no, "r_den");
    if (pr.a < 1 || pr.b < 1 || pr.c < 1) throw ParseError("a, b and c must be positive", line_no);
    if (sum != pr.a + pr.b) throw ParseError("sum is not a+b", line_no);
    pr.r = Rational(as_signed(pr.c), as_signed(sum));
    if (pr.r.num() != num || pr.r.den() != den) throw ParseError("r_num/r_den is not reduced c/sum", line_no);
    if (fields[6] != pr.r.to_decimal(6)) throw ParseError("r_dec does not match c/sum", line_no);
    rows.push_back(pr);
  }
  return rows;
}

void cache_store(const std::filesystem::path& path, const std::vector<PairResult>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write_pairs_csv(out, rows);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<PairResult> cache_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return read_pairs_csv(in);
}

VerificationReport verify_pair_rows(const std::vector<PairResult>& rows, CacheCheck mode) {
  VerificationReport report("cache", {{"rows", rows.size()}, {"mode", mode == CacheCheck::Strict ? "strict" : "spot"}});
  if (rows.empty()) {
    report.note("no rows");
    return report;
  }
  std::vector<std::size_t> picks;
  constexpr std::size_t kSpotRows = 100;
  if (mode == CacheCheck::Strict || rows.size() <= kSpotRows) {
    for (std::size_t i = 0; i < rows.size(); ++i) picks.push_back(i);
  } else {
    for (std::size_t k = 0; k < kSpotRows; ++k) picks.push_back(k * (rows.size() - 1) / (kSpotRows - 1));
  }

  std::uint64_t bound = 1;
  std::uint64_t c_top = 1;
  for (std::size_t i : picks) {
    bound = std::max({bound, rows[i].a, rows[i].b});
    c_top = std::max(c_top, rows[i].c);
  }
  const PhiFactorialTable table = build_table(std::max(bound, c_top));
  for (std::size_t i : picks) {
    const PairResult& pr = rows[i];
    const ExponentVec target = vec_add(table.exponents(pr.a), table.exponents(pr.b));
    report.count();
    const bool divides = dominates(table.exponents(pr.c), target);
    const bool minimal = pr.c == 1 || !dominates(table.exponents(pr.c - 1), target);
    if (!divides || !minimal) {
      report.fail({{"row", i + 1}, {"a", pr.a}, {"b", pr.b}, {"c", pr.c}, {"divides", divides}, {"minimal", minimal}});
    }
  }
  return report;
}

}  // namespace phifact
