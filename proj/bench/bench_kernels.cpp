// Serial vs OpenMP kernels on tables large enough for the parallel path.
// Associative and latin tables force a full scan, so both versions do the
// same amount of work.

#include <benchmark/benchmark.h>

#include "ialg/constructors.hpp"
#include "ialg/identities.hpp"
#include "ialg/kernels.hpp"

using namespace ialg;

namespace {

MagmaPtr zn_add(std::int64_t n) { return zn_group(n).magma(); }
MagmaPtr loop(std::int64_t n) { return new_loop(n, 2).magma(); }

void BM_assoc_serial(benchmark::State& state) {
  const auto m = zn_add(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::first_nonassociative(*m));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}

void BM_assoc_parallel(benchmark::State& state) {
  const auto m = zn_add(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::first_nonassociative(*m));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}

void BM_moufang_serial(benchmark::State& state) {
  const auto m = zn_add(state.range(0));
  const auto& id = lookup_identity("Moufang");
  const auto lhs = id.lhs.compile();
  const auto rhs = id.rhs.compile();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::first_violation(*m, lhs, rhs));
}

void BM_moufang_parallel(benchmark::State& state) {
  const auto m = zn_add(state.range(0));
  const auto& id = lookup_identity("Moufang");
  const auto lhs = id.lhs.compile();
  const auto rhs = id.rhs.compile();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::first_violation(*m, lhs, rhs));
}

void BM_latin_serial(benchmark::State& state) {
  const auto m = loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::first_nonlatin(*m));
}

void BM_latin_parallel(benchmark::State& state) {
  const auto m = loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::first_nonlatin(*m));
}

}  // namespace

BENCHMARK(BM_assoc_serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assoc_parallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_moufang_serial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_moufang_parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_latin_serial)->Arg(257)->Arg(1025)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_latin_parallel)->Arg(257)->Arg(1025)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
