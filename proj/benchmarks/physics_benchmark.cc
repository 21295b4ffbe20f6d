// Copyright 2026 The fluxring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <complex>

#include "fluxring/beam.h"
#include "fluxring/coupling.h"
#include "fluxring/dynamics.h"
#include "fluxring/ring.h"
#include "fluxring/two_qubit.h"

namespace fluxring {
namespace {

RingParams reference_params() {
  RingDesign design;
  design.radius = 2e-6;
  design.width = 60e-9;
  design.depth = 10e-9;
  Material material;
  material.pair_density = 2.1e28;
  material.london_depth = 50e-9;
  material.optical_skin_depth = 7e-9;
  return derive_ring_params(design, material);
}

BeamDrive reference_beam(const RingParams& params) {
  BeamDrive beam;
  beam.oam_index = 1;
  beam.omega = transition_angular_frequency(2, 0, params);
  beam.a0 = 8.6e-14;
  beam.polarization = Polarization::LinearX();
  return beam;
}

void BM_DeriveRingParams(benchmark::State& state) {
  const RingParams params = reference_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_ring_params(params.design, params.material));
  }
}
BENCHMARK(BM_DeriveRingParams);

void BM_MatrixElementTerms(benchmark::State& state) {
  const RingParams params = reference_params();
  const HarmonicDrive drive = azimuthal_component(reference_beam(params));
  for (auto _ : state) {
    for (int m = -4; m <= 4; ++m) {
      for (int n = -4; n <= 4; ++n) {
        benchmark::DoNotOptimize(matrix_element_terms(m, n, drive, params));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * 81);
}
BENCHMARK(BM_MatrixElementTerms);

void BM_MatrixElementQuadrature(benchmark::State& state) {
  const RingParams params = reference_params();
  const HarmonicDrive drive = azimuthal_component(reference_beam(params));
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        matrix_element_quadrature(0, 2, drive, params, 1.3e-13, kDefaultNMax, points));
  }
}
BENCHMARK(BM_MatrixElementQuadrature)->Arg(64)->Arg(512)->Arg(4096);

void BM_EvolveRwa(benchmark::State& state) {
  const RingParams params = reference_params();
  const BeamDrive beam = reference_beam(params);
  const auto ground = StateVector::basis_state(kDefaultNMax, 0);
  const double period = 2 * 3.141592653589793 / rabi_frequency(params, 8.6e-14);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evolve(ground, beam, params, period, 1e-10, EvolutionMode::kRwa));
  }
}
BENCHMARK(BM_EvolveRwa)->Unit(benchmark::kMillisecond);

// Full mode over 1 ps: the carrier-frequency terms set the step size.
void BM_EvolveFull(benchmark::State& state) {
  const RingParams params = reference_params();
  const BeamDrive beam = reference_beam(params);
  const auto ground = StateVector::basis_state(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evolve(ground, beam, params, 1e-12, 1e-10, EvolutionMode::kFull));
  }
}
BENCHMARK(BM_EvolveFull)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TwoQubitCz(benchmark::State& state) {
  const RingParams params = reference_params();
  const auto pair = TwoRingConfig::Coaxial(params, params, 1e-4);
  const auto plus = make_two_qubit_state({1.0, 1.0, 1.0, 1.0});
  for (auto _ : state) {
    const auto out = evolve_two_qubit(plus, pair, cz_gate_time(pair));
    benchmark::DoNotOptimize(schmidt_coefficients(out));
  }
}
BENCHMARK(BM_TwoQubitCz);

}  // namespace
}  // namespace fluxring

BENCHMARK_MAIN();
