#include <benchmark/benchmark.h>

#include "dualfunc/dualfunc.hpp"

namespace {

using namespace dualfunc;

void BM_DualMultiply(benchmark::State& state) {
  DualReal x{1.234, 0.5}, y{0.987, -1.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_DualMultiply);

void BM_LiftExp(benchmark::State& state) {
  DualReal x{0.731, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift(ElementaryFunctionId::exp(), x));
  }
}
BENCHMARK(BM_LiftExp);

void BM_GammaDual(benchmark::State& state) {
  DualReal a{3.7, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_dual(a));
  }
}
BENCHMARK(BM_GammaDual);

void BM_PochhammerDual(benchmark::State& state) {
  DualReal a{0.8, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pochhammer_dual(a, state.range(0)));
  }
}
BENCHMARK(BM_PochhammerDual)->Arg(4)->Arg(32);

void BM_Gauss2F1(benchmark::State& state) {
  DualReal a1{0.7, 1.0}, a2{1.3, 0.0}, b1{2.1, 0.0};
  DualReal x{static_cast<double>(state.range(0)) / 100.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss(a1, a2, b1, x));
  }
}
BENCHMARK(BM_Gauss2F1)->Arg(25)->Arg(60)->Arg(90);

void BM_Confluent1F1(benchmark::State& state) {
  DualReal a{0.9, 1.0}, b{1.8, 0.0}, x{2.5, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(confluent(a, b, x));
  }
}
BENCHMARK(BM_Confluent1F1);

void BM_BetaQuadrature(benchmark::State& state) {
  DualReal a{0.6, 1.0}, c{1.4, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_dual_quadrature(a, c, 1e-10));
  }
}
BENCHMARK(BM_BetaQuadrature);

void BM_ThetaOdeResidual(benchmark::State& state) {
  HypergeometricParams params{{DualReal{0.7, 1.0}, DualReal{1.3}}, {DualReal{2.1}}};
  DualReal x{0.4, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_ode_residual(params, x));
  }
}
BENCHMARK(BM_ThetaOdeResidual);

void BM_GaussBoundarySummation(benchmark::State& state) {
  DualReal a1{0.5, 1.0}, a2{0.4}, b1{2.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss(a1, a2, b1, DualReal{1.0}));
  }
}
BENCHMARK(BM_GaussBoundarySummation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
