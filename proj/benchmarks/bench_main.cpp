#include <benchmark/benchmark.h>

#include <cmath>

#include "mbhankel/coefficient_catalog.hpp"
#include "mbhankel/complex_kernel.hpp"
#include "mbhankel/mellin_barnes.hpp"
#include "mbhankel/quadrature_oracle.hpp"
#include "mbhankel/special_functions.hpp"

using namespace mbhankel;

static void BM_LogGamma(benchmark::State& state) {
  Complex s(0.3, 0.0);
  for (auto _ : state) {
    s += Complex(0.0, 0.01);
    benchmark::DoNotOptimize(log_gamma_c(s));
  }
}
BENCHMARK(BM_LogGamma);

static void BM_BesselJ0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::bessel_j0(x + 0.5));
}
BENCHMARK(BM_BesselJ0)->Arg(1)->Arg(12)->Arg(100);

static void BM_BesselK0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::bessel_k0(x + 0.5));
}
BENCHMARK(BM_BesselK0)->Arg(1)->Arg(12)->Arg(100);

static void BM_ContourTransform(benchmark::State& state) {
  const auto ex = static_cast<catalog::Example>(state.range(0));
  const auto coef = catalog::coefficient(ex, {1.0, 1.0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(mb::transform(coef, 2.0, 1e-10).value);
  state.SetLabel(catalog::label(ex));
}
BENCHMARK(BM_ContourTransform)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const catalog::ExampleParams p{1.0, 1.0, 1};
  const auto f = catalog::example_function(catalog::Example::A3, p);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::hankel0_direct(f, 2.0, 1e-10).value);
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
