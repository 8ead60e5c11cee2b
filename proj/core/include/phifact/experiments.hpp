#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phifact/phi_factorial.hpp"
#include "phifact/rational.hpp"
#include "phifact/report.hpp"

namespace phifact {

struct ScanConfig {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 100;
  std::uint64_t table_slack = 64;
  std::filesystem::path output_path;
  unsigned parallelism = 1;
  std::optional<std::filesystem::path> cache_path;

  void validate() const;
};

struct Table1Row {
  std::uint64_t n = 0;
  std::uint64_t count_gt = 0;
  std::uint64_t total = 0;
  Rational proportion;
};

enum class PairOrder { Ordered, Unordered };

// Pairs 1 <= a, b <= N with r(a,b) > 1 (exact comparison). Ordered counts all
// N^2 pairs; Unordered counts a <= b over N(N+1)/2 pairs.
std::vector<Table1Row> table1_proportions(const std::vector<std::uint64_t>& n_values,
                                          PairOrder order = PairOrder::Ordered, unsigned jobs = 1);

// c(a,b) for every ordered pair in [1,N]^2, a-major.
std::vector<PairResult> figure1_data(std::uint64_t n, unsigned jobs = 1);

// c(n,n) for n in [1, n_max].
std::vector<PairResult> figure2_data(std::uint64_t n_max, unsigned jobs = 1);

struct Theorem2Scan {
  VerificationReport report;
  PairResult max_ratio;                       // largest r(a,b) seen
  std::optional<PairResult> max_ratio_large;  // largest r(a,b) with a+b >= 400
};

// c(a,b) <= a+b+floor((a+b)/8) for n_min <= a <= b <= n_max.
Theorem2Scan scan_theorem2(std::uint64_t n_min, std::uint64_t n_max, unsigned jobs = 1);

struct LowerBoundRow {
  std::uint64_t b = 0;
  std::int64_t min_delta = 0;  // min over a <= b of c(a,b) - (a+b)
  std::uint64_t a_at_min = 0;  // smallest a attaining it
};

std::vector<LowerBoundRow> scan_lower_bound(std::uint64_t n_min, std::uint64_t n_max, unsigned jobs = 1);

// CSV schemas.
inline constexpr const char* kPairsHeader = "a,b,sum,c,r_num,r_den,r_dec";
inline constexpr const char* kTable1Header = "N,count_gt,total,proportion";
inline constexpr const char* kFigure2Header = "n,c,r_num,r_den,r_dec";
inline constexpr const char* kLowerBoundHeader = "b,min_delta,a_at_min";

void write_pairs_csv(std::ostream& os, const std::vector<PairResult>& rows);
void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows);
void write_figure2_csv(std::ostream& os, const std::vector<PairResult>& rows);
void write_lower_bound_csv(std::ostream& os, const std::vector<LowerBoundRow>& rows);

// Parses the pairs CSV. Rows must be internally consistent (sum = a+b, r equal
// to c/sum, r_dec its 6-digit rendering); minimality is not checked here.
std::vector<PairResult> read_pairs_csv(std::istream& is);

// Writes atomically: a temp file beside `path`, then rename.
void cache_store(const std::filesystem::path& path, const std::vector<PairResult>& rows);
std::vector<PairResult> cache_load(const std::filesystem::path& path);

enum class CacheCheck { Spot, Strict };

// Re-solves rows against a fresh table: every row (Strict) or up to 100
// evenly spaced rows (Spot).
VerificationReport verify_pair_rows(const std::vector<PairResult>& rows, CacheCheck mode);

}  // namespace phifact
