#include <benchmark/benchmark.h>

#include "delpezzo/cubic.hpp"
#include "delpezzo/projective_search.hpp"

using namespace delpezzo;

namespace {

// Quaternary pair with no common zero over F_243: every candidate is visited.
const GaloisField& f243() {
  static const GaloisField field(3, 5);
  return field;
}

ProjectiveSearch absent_pair() {
  return ProjectiveSearch(f243(), {DiagonalForm{2, {1, 1, 1, 1}}, DiagonalForm{2, {1, 2, 1, 2}}});
}

void BM_FullScanSerial(benchmark::State& state) {
  const auto s = absent_pair();
  for (auto _ : state) benchmark::DoNotOptimize(s.first_zero_serial());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.candidate_count()));
}

void BM_FullScanParallel(benchmark::State& state) {
  const auto s = absent_pair();
  for (auto _ : state) benchmark::DoNotOptimize(s.first_zero_parallel());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.candidate_count()));
}

void BM_CountSerial(benchmark::State& state) {
  const auto s = absent_pair();
  for (auto _ : state) benchmark::DoNotOptimize(s.count_zeros_serial());
}

void BM_CountParallel(benchmark::State& state) {
  const auto s = absent_pair();
  for (auto _ : state) benchmark::DoNotOptimize(s.count_zeros_parallel());
}

void BM_ModP3Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_primitive_solutions_mod_p3_serial(7, 3));
}

void BM_ModP3Parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_primitive_solutions_mod_p3_parallel(7, 3));
}

}  // namespace

BENCHMARK(BM_FullScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModP3Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModP3Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
