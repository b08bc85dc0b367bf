#include <benchmark/benchmark.h>

#include "paving/experiments.hpp"
#include "paving/linalg.hpp"
#include "paving/weaver.hpp"

namespace {

using namespace paving;

void BM_BruteForceMin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Projection p = random_projection(n, n / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(experiments::brute_force_min(p).min_norm);
  state.counters["states"] = static_cast<double>(std::uint64_t{1} << (n - 1));
}
BENCHMARK(BM_BruteForceMin)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_OperatorNormJacobi(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const Projection p = random_projection(2 * r, r, 2);
  std::vector<std::int8_t> signs(2 * r);
  for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = (i % 3 == 0) ? -1 : 1;
  const SymmetricMatrix ms = compress_psp(p, Symmetry(signs));
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(ms));
}
BENCHMARK(BM_OperatorNormJacobi)->RangeMultiplier(2)->Range(8, 128);

void BM_OperatorNormPower(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const Projection p = random_projection(2 * r, r, 3);
  std::vector<std::int8_t> signs(2 * r);
  for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = (i % 3 == 0) ? -1 : 1;
  const SymmetricMatrix m = compress_psp(p, Symmetry(signs));
  for (auto _ : state) benchmark::DoNotOptimize(power_operator_norm(m));
}
BENCHMARK(BM_OperatorNormPower)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_MinOverSymmetriesV0(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weaver::min_over_symmetries_v0(m).argmin_alpha);
}
BENCHMARK(BM_MinOverSymmetriesV0)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyOrthonormal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const weaver::ExactFrame f = weaver::build_frame(m);
  for (auto _ : state) benchmark::DoNotOptimize(weaver::verify_orthonormal(f));
}
BENCHMARK(BM_VerifyOrthonormal)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
