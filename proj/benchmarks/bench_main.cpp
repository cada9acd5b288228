#include <benchmark/benchmark.h>

#include "hochschild/cochain.hpp"
#include "hochschild/fixtures.hpp"
#include "hochschild/homology.hpp"

using namespace hochschild;

namespace {

FieldSpec field_of(int64_t code) { return code == 0 ? FieldSpec::rational() : FieldSpec::prime(101); }

void BM_DiskDifferential(benchmark::State& state) {
  auto q = static_cast<std::size_t>(state.range(0));
  Triple t = fixture_triple(field_of(state.range(1)), "truncated_poly_3", "dual_numbers");
  auto disk = build_disk_pair(q + 1);
  for (auto _ : state) benchmark::DoNotOptimize(pair_differential(disk, q, t));
}
BENCHMARK(BM_DiskDifferential)->ArgsProduct({{1, 2, 3}, {0, 101}})->Unit(benchmark::kMillisecond);

void BM_SecondaryDirect(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Triple t = fixture_triple(field_of(state.range(1)), "truncated_poly_3", "dual_numbers");
  for (auto _ : state) benchmark::DoNotOptimize(secondary_differential_direct(n, t));
}
BENCHMARK(BM_SecondaryDirect)->ArgsProduct({{2, 3, 4}, {0, 101}})->Unit(benchmark::kMillisecond);

void BM_StreamedSquareCheck(benchmark::State& state) {
  auto q = static_cast<std::size_t>(state.range(0));
  Triple t = fixture_triple(field_of(state.range(1)), "truncated_poly_3", "dual_numbers");
  auto disk = build_disk_pair(q + 2);
  for (auto _ : state) benchmark::DoNotOptimize(differential_square_defect(disk, q, t));
}
BENCHMARK(BM_StreamedSquareCheck)->ArgsProduct({{2, 3}, {0, 101}})->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  auto q = static_cast<std::size_t>(state.range(0));
  Triple t = fixture_triple(field_of(state.range(1)), "truncated_poly_3", "dual_numbers");
  auto d = pair_differential(build_disk_pair(q + 1), q, t);
  state.counters["rows"] = static_cast<double>(d.rows());
  state.counters["nnz"] = static_cast<double>(d.nnz());
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
}
BENCHMARK(BM_Rank)->ArgsProduct({{2, 3}, {0, 101}})->Unit(benchmark::kMillisecond);

void BM_CohomologyDims(benchmark::State& state) {
  Triple t = fixture_triple(field_of(state.range(0)), "truncated_poly_3", "dual_numbers");
  auto disk = build_disk_pair(4);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(disk, t, 3));
}
BENCHMARK(BM_CohomologyDims)->Arg(0)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
