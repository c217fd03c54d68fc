#include <benchmark/benchmark.h>

#include <cmath>

#include "prabhakar/fde.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/special_functions.hpp"

using namespace prabhakar;

namespace {

GridFunction sine_grid(std::size_t intervals) {
  return GridFunction::sample([](double t) { return std::sin(t); }, [](double t) { return std::cos(t); }, 0.0,
                              5.0 / static_cast<double>(intervals), intervals);
}

void BM_MittagLefflerSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(0.5, -0.7));
}
BENCHMARK(BM_MittagLefflerSeries);

void BM_MittagLefflerIntegral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(0.5, -50.0));
}
BENCHMARK(BM_MittagLefflerIntegral);

void BM_RlIntegral(benchmark::State& state) {
  const auto f = sine_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rl_integral(f, 0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RlIntegral)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_PrabhakarIntegral(benchmark::State& state) {
  const auto f = sine_grid(static_cast<std::size_t>(state.range(0)));
  const PrabhakarParams p{0.5, 1.0, 1.0, -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(prabhakar_integral(f, p, 0.0));
}
BENCHMARK(BM_PrabhakarIntegral)->RangeMultiplier(2)->Range(256, 4096);

FDEProblem decay_problem(OperatorKind kind, double h) {
  FDEProblem p;
  p.op.kind = kind;
  p.op.order = 0.5;
  p.rhs = {[](double, double y) { return -y; }, [](double, double) { return 0.0; },
           [](double, double) { return -1.0; }};
  p.y0 = 1.0;
  p.T = 5.0;
  p.h = h;
  return p;
}

void BM_SolveCfIntegral(benchmark::State& state) {
  const auto p = decay_problem(OperatorKind::CfDerivative, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cf_integral(p));
}
BENCHMARK(BM_SolveCfIntegral)->Unit(benchmark::kMillisecond);

void BM_SolveAbcIntegral(benchmark::State& state) {
  const auto p = decay_problem(OperatorKind::AbcDerivative, 5.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_abc_integral(p));
}
BENCHMARK(BM_SolveAbcIntegral)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_SolveCaputoAdams(benchmark::State& state) {
  const auto p = decay_problem(OperatorKind::CaputoDerivative, 5.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_caputo_adams(p));
}
BENCHMARK(BM_SolveCaputoAdams)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
