#include <benchmark/benchmark.h>

#include "oamspec/overlap.hpp"
#include "oamspec/special_functions.hpp"
#include "oamspec/spectrum.hpp"

namespace {

void BM_BesselSequence(benchmark::State& state) {
  const int orders = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::bessel_i_scaled_orders(orders, x));
    x = x < 50.0 ? x * 1.1 : 0.5;
  }
}
BENCHMARK(BM_BesselSequence)->Arg(8)->Arg(32)->Arg(128);

void BM_CoefficientRadial(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const oam::QuadratureConfig quad;
  const auto pump = oam::ModeSpec::lg(l, 0, 1.0);
  const auto sig = oam::ModeSpec::lg(l + 1, 0, 1.0);
  const auto idl = oam::ModeSpec::lg(-1, 0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::coefficient(pump, sig, idl, quad));
  }
}
BENCHMARK(BM_CoefficientRadial)->Arg(0)->Arg(4);

void BM_CoefficientPovRaw(benchmark::State& state) {
  const oam::QuadratureConfig quad;
  const auto pump = oam::ModeSpec::pov(2, 0.25, 0.5);
  const auto sig = oam::ModeSpec::pov(1, 0.25, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::coefficient(pump, sig, sig, quad));
  }
}
BENCHMARK(BM_CoefficientPovRaw);

void BM_BuildSpectrum(benchmark::State& state) {
  const auto kind = static_cast<oam::ScenarioKind>(state.range(0));
  const oam::QuadratureConfig quad;
  const auto sc = oam::Scenario::make(kind, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::build_spectrum(sc, quad));
  }
}
BENCHMARK(BM_BuildSpectrum)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
