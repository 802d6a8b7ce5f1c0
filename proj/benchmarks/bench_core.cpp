#include <benchmark/benchmark.h>

#include <vector>

#include "wgqed/boundstate.hpp"
#include "wgqed/dynamics.hpp"
#include "wgqed/greens_continuum.hpp"
#include "wgqed/greens_provider.hpp"
#include "wgqed/model.hpp"
#include "wgqed/scattering.hpp"

namespace {

using namespace wgqed;

WaveguideSpec bench_waveguide() {
  WaveguideSpec wg;
  wg.omega_c = ghz_to_rad(6.5213);
  wg.length_L = 0.3;
  return wg;
}

SystemSpec bench_system() {
  SystemSpec system;
  system.waveguide = bench_waveguide();
  system.port_left = {-0.138, mhz_to_rad(225.0)};
  system.port_right = {0.138, mhz_to_rad(225.0)};
  system.qubits = {{-0.0224750, ghz_to_rad(6.1), 0.0, mhz_to_rad(62.53)},
                   {0.0224750, ghz_to_rad(6.1), 0.0, mhz_to_rad(62.53)}};
  return system;
}

void bm_g0_pole(benchmark::State& state) {
  const WaveguideSpec wg = bench_waveguide();
  const double omega = ghz_to_rad(6.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g0_pole(wg, -0.05, 0.07, omega));
  }
}
BENCHMARK(bm_g0_pole);

void bm_g0_truncated(benchmark::State& state) {
  const WaveguideSpec wg = bench_waveguide();
  const double omega = ghz_to_rad(6.0);
  const long n_modes = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g0_truncated(wg, -0.05, 0.07, omega, n_modes));
  }
  state.SetComplexityN(n_modes);
}
BENCHMARK(bm_g0_truncated)->Arg(100)->Arg(10000)->Arg(1000000)
    ->Complexity(benchmark::oN);

void bm_s_rl_point(benchmark::State& state) {
  const SystemSpec system = bench_system();
  const GreensProvider provider = make_pole_provider(system.waveguide);
  const double omega = ghz_to_rad(6.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_rl(system, provider, omega));
  }
}
BENCHMARK(bm_s_rl_point);

void bm_s_rl_spectrum(benchmark::State& state) {
  const SystemSpec system = bench_system();
  const GreensProvider provider = make_pole_provider(system.waveguide);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        s_rl_spectrum(system, provider, 6.0, 7.2, state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_s_rl_spectrum)->Arg(101)->Arg(1001)->Complexity(benchmark::oN);

void bm_bound_state_solve(benchmark::State& state) {
  SystemSpec system = bench_system();
  system.qubits.resize(1);
  const GreensProvider provider = make_pole_provider(system.waveguide);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_bound_state(system, provider));
  }
}
BENCHMARK(bm_bound_state_solve);

void bm_bloch_trace(benchmark::State& state) {
  BoundStateResult bound;
  bound.omega_b = ghz_to_rad(6.077);
  bound.gamma_b = mhz_to_rad(1.0);
  bound.Z = 0.9;
  const DriveSpec drive{bound.omega_b, mhz_to_rad(0.5), 2e-6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_bloch(bound, drive, 5e-6, 1.0e-9));
  }
}
BENCHMARK(bm_bloch_trace);

}  // namespace

BENCHMARK_MAIN();
