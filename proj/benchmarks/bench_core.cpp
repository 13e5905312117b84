#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "econamp/circuit.hpp"
#include "econamp/devices.hpp"
#include "econamp/econmap.hpp"

static void BM_EbersMoll(benchmark::State& state) {
  econamp::BjtParams p;
  p.alpha_i = 0.1;
  double v = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(econamp::ebers_moll_currents(p, v, -5.0));
    v = v < 0.8 ? v + 1e-6 : 0.6;
  }
}
BENCHMARK(BM_EbersMoll);

static void BM_SolveOperatingPoint(benchmark::State& state) {
  econamp::AmplifierConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(econamp::solve_operating_point(cfg));
    cfg.r_b1 = cfg.r_b1 < 200e3 ? cfg.r_b1 + 1.0 : 100e3;
  }
}
BENCHMARK(BM_SolveOperatingPoint);

static void BM_FitLinear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = u(rng);
    ys[i] = 5.19 * xs[i] + 0.01 * u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(econamp::fit_linear(xs, ys));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_FitLinear)->Range(16, 1 << 16);

static void BM_AnalyzeSeries(benchmark::State& state) {
  econamp::EconSeries s;
  for (int i = 0; i < state.range(0); ++i) {
    const double in = 100.0 + 7.0 * i;
    s.periods.push_back({std::to_string(i), 0.9 * in, 0.1 * in, 5.19 * in, {}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(econamp::analyze_series(s));
}
BENCHMARK(BM_AnalyzeSeries)->Range(16, 4096);
BENCHMARK_MAIN();
