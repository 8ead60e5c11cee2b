#include <benchmark/benchmark.h>

#include "phifact/dickson.hpp"
#include "phifact/experiments.hpp"
#include "phifact/phi_factorial.hpp"
#include "phifact/primes.hpp"

using namespace phifact;

static void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(limit).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Arg(50'000'000)->Unit(benchmark::kMillisecond);

static void BM_IsPrime(benchmark::State& state) {
  std::uint64_t n = (std::uint64_t{1} << 62) + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(n));
    n += 2;
  }
}
BENCHMARK(BM_IsPrime);

static void BM_Factorize(benchmark::State& state) {
  // Product of two primes near 2^31: exercises the rho path.
  const std::uint64_t n = 2147483647ULL * 2147483629ULL;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMicrosecond);

static void BM_BuildTable(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(n).n_max());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTable)->Arg(1'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_COfScan(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const auto table = build_table(recommended_table_size(bound));
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t a = 1; a <= bound; ++a) {
      for (std::uint64_t b = a; b <= bound; ++b) acc += c_of(a, b, table).c;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bound * (bound + 1) / 2));
}
BENCHMARK(BM_COfScan)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_Table1(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table1_proportions({n}).front().count_gt);
}
BENCHMARK(BM_Table1)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_Theorem5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem5(131).c_value);
}
BENCHMARK(BM_Theorem5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
