#include <benchmark/benchmark.h>

#include "greentrace/analysis.hpp"
#include "greentrace/forward.hpp"
#include "greentrace/inverse.hpp"

using namespace greentrace;

namespace {

FluxProfile fixture_profile(std::size_t n) {
  PolynomialMap f{cplx(0.0, 0.0), {cplx(1.0, 0.0), cplx(0.2, 0.0)}};
  return forward_operator(f, n).profile;
}

void BM_Hilbert(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  const FourierCoefficients c = analyze(PeriodicSamples(v));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(c));
}

void BM_Forward(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  PolynomialMap f{cplx(0.0, 0.0), {cplx(1.0, 0.0), cplx(0.2, 0.0)}};
  const MapSpec spec = f;
  for (auto _ : state) benchmark::DoNotOptimize(forward_operator(spec, n));
}

void BM_Reconstruct(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ForwardResult fwd = forward_operator(
      PolynomialMap{cplx(0.0, 0.0), {cplx(1.0, 0.0), cplx(0.2, 0.0)}}, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(reconstruct(fwd.profile, fwd.anchors, n));
}

void BM_CurvatureFromFlux(benchmark::State& state) {
  const FluxProfile p = fixture_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_from_flux(p));
}

}  // namespace

BENCHMARK(BM_Hilbert)->Arg(512)->Arg(4096);
BENCHMARK(BM_Forward)->Arg(256)->Arg(512);
BENCHMARK(BM_Reconstruct)->Arg(256)->Arg(512);
BENCHMARK(BM_CurvatureFromFlux)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
