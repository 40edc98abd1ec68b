#include <benchmark/benchmark.h>

#include "nlcut/dinkelbach.hpp"
#include "nlcut/eigen.hpp"
#include "nlcut/generators.hpp"
#include "nlcut/linear_spectrum.hpp"
#include "nlcut/oracles.hpp"

namespace {

using namespace nlcut;

Graph bench_graph(int n) { return random_connected_graph(n, 0.4, 17); }

void BM_CheegerOracle(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cheeger(g).value);
}
BENCHMARK(BM_CheegerOracle)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_DualCheegerOracle(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_cheeger(g).value);
}
BENCHMARK(BM_DualCheegerOracle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_MinmaxKCut(benchmark::State& state) {
  Graph g = bench_graph(8);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minmax_k_cut(g, k, false).value);
}
BENCHMARK(BM_MinmaxKCut)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_VerifyMaxcut(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  CutCertificate best = maxcut(g);
  RVector x = indicator(g.n(), best.sets[0], best.sets[1]);
  for (auto _ : state) benchmark::DoNotOptimize(verify(EigenproblemId::maxcut_inf, g, best.value, x).verdict);
}
BENCHMARK(BM_VerifyMaxcut)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_VerifyCheegerNew(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  CutCertificate best = cheeger(g);
  RVector x = indicator(g.n(), best.sets[0], best.sets[1]);
  for (auto _ : state) benchmark::DoNotOptimize(verify(EigenproblemId::cheeger_new, g, best.value, x).verdict);
}
BENCHMARK(BM_VerifyCheegerNew)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_SpectrumScan(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_scan(EigenproblemId::signless_one_lap, g).size());
}
BENCHMARK(BM_SpectrumScan)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

void BM_DinkelbachExact(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(ratio_problem(ProblemId::cheeger_tv), g).final.value);
}
BENCHMARK(BM_DinkelbachExact)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_DinkelbachFlip(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  DinkelbachOptions opts;
  opts.inner = InnerSolver::local_flip;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(ratio_problem(ProblemId::maxcut_ratio), g, std::nullopt, opts).final.value);
}
BENCHMARK(BM_DinkelbachFlip)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_JacobiSpectrum(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalized_laplacian_spectrum(g, true).eigenvalues.size());
}
BENCHMARK(BM_JacobiSpectrum)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
