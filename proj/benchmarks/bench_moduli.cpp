#include <benchmark/benchmark.h>

#include "moduli/groups.hpp"
#include "moduli/homology.hpp"
#include "moduli/kft.hpp"

using namespace moduli;

static void BM_CensusNormalized(benchmark::State& state) {
  const Signature sig(0, {2, 2, 2, 3});
  CensusOptions opt;
  opt.normalization = kft_normalization();
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_smooth_epis(sig, 4, opt));
}
BENCHMARK(BM_CensusNormalized);

static void BM_CensusFull(benchmark::State& state) {
  const Signature sig(0, {2, 2, 2, 3});
  CensusOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_smooth_epis(sig, 4, opt));
}
BENCHMARK(BM_CensusFull)->Arg(1)->Arg(4);

static void BM_BranchCheckSymbolic(benchmark::State& state) {
  const RatFunc l = RatFunc::lambda();
  for (auto _ : state) benchmark::DoNotOptimize(kft_branch_check(l));
}
BENCHMARK(BM_BranchCheckSymbolic)->Unit(benchmark::kMillisecond);

static void BM_GroupCheckSymbolic(benchmark::State& state) {
  const RatFunc l = RatFunc::lambda();
  for (auto _ : state) benchmark::DoNotOptimize(kft_group_check(l));
}
BENCHMARK(BM_GroupCheckSymbolic)->Unit(benchmark::kMillisecond);

static void BM_LegendreCheckSymbolic(benchmark::State& state) {
  const RatFunc l = RatFunc::lambda();
  for (auto _ : state) benchmark::DoNotOptimize(legendre_cover_check(l));
}
BENCHMARK(BM_LegendreCheckSymbolic)->Unit(benchmark::kMillisecond);

static void BM_InvariantsRational(benchmark::State& state) {
  const Rational l = Rational::parse("-5/2");
  for (auto _ : state) benchmark::DoNotOptimize(kft_invariants(l));
}
BENCHMARK(BM_InvariantsRational);

static void BM_HomologyGroupCheck(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology_group_check(a));
}
BENCHMARK(BM_HomologyGroupCheck)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
