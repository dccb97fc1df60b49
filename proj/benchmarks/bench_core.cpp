#include <benchmark/benchmark.h>

#include <blaschke_lab/bergman.hpp>
#include <blaschke_lab/blaschke.hpp>
#include <blaschke_lab/carleson.hpp>
#include <blaschke_lab/geninterp.hpp>
#include <blaschke_lab/seqgen.hpp>

using namespace blaschke_lab;

namespace {

FiniteSequence sample(int n) { return gen_random_carleson(7, {n, 4.0 * n, 1e-4, 0.5, 0.0}); }

void BM_Evaluate(benchmark::State& state) {
  const BlaschkeProduct b(sample(static_cast<int>(state.range(0))));
  Complex z(0.3, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b(z));
    z *= Complex(0.999999, 1e-6);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_SeparationReport(benchmark::State& state) {
  const BlaschkeProduct b(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(separation_report(b).delta);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeparationReport)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_CarlesonNorm(benchmark::State& state) {
  const FiniteSequence s = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(carleson_norm(s).norm);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CarlesonNorm)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_KernelIntegral(benchmark::State& state) {
  const QuadratureGrid g = state.range(0) ? QuadratureGrid::standard() : QuadratureGrid::coarse();
  for (auto _ : state) benchmark::DoNotOptimize(kernel_integral(DiskPoint(0.99, 0.0), g));
}
BENCHMARK(BM_KernelIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VghInterpolate(benchmark::State& state) {
  const ClusterPartition part = cluster_sequence(gen_radial_geometric(0.5, static_cast<int>(state.range(0))), 0.05, 0.9);
  std::vector<HermiteJet> jets;
  for (const Cluster& c : part.clusters) {
    HermiteJet j = zero_jet(c);
    j.derivatives[0][0] = 1.0;
    jets.push_back(j);
  }
  InterpolateOptions opt;
  opt.radii = {0.9, 0.99};
  for (auto _ : state) benchmark::DoNotOptimize(vgh_interpolate({part, jets, 2.0}, opt).norm_ratio);
}
BENCHMARK(BM_VghInterpolate)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
