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

#ifndef FLUXRING_TWO_QUBIT_H_
#define FLUXRING_TWO_QUBIT_H_

#include <array>
#include <complex>

#include "fluxring/ring.h"

namespace fluxring {

// mu0 pi r^4 / (2 d_R^3): far-field coupling of two coaxial rings.
double mutual_inductance_coaxial(double radius, double separation);

// The dipole formula above needs d_R >= 10 r.
bool coaxial_far_field(double radius, double separation);

// Two inductively coupled rings. The coupling is modeled as an ideal switch.
struct TwoRingConfig {
  RingParams ring_a;
  RingParams ring_b;
  double separation = 0.0;         // m
  double mutual_inductance = 0.0;  // H
  bool coupling_enabled = true;

  // Coaxial rings at the given separation; the mutual inductance uses
  // mu0 pi r_a^2 r_b^2 / (2 d^3), which reduces to the identical-ring form.
  static TwoRingConfig Coaxial(const RingParams& a, const RingParams& b, double separation);
  static TwoRingConfig Explicit(const RingParams& a, const RingParams& b, double separation,
                                double mutual_inductance);

  void validate() const;
};

// Ising energy M I_a I_b = M n_a n_b (Phi0 / L_T,a)(Phi0 / L_T,b). Zero while
// the coupling is switched off.
double interaction_energy(int n_a, int n_b, const TwoRingConfig& config);

// pi hbar / H_M(2, 2); for identical rings pi hbar L_T^2 / (4 M Phi0^2).
double cz_gate_time(const TwoRingConfig& config);

// H_M(2, 2) t / hbar.
double controlled_phase(double t, const TwoRingConfig& config);

// Amplitudes over |n_a n_b> with n in {0, 2}, ordered 00, 02, 20, 22.
using TwoQubitState = std::array<std::complex<double>, 4>;

TwoQubitState make_two_qubit_state(const TwoQubitState& amplitudes);  // normalizes
std::size_t two_qubit_index(int n_a, int n_b);

enum class PhaseGauge {
  kRaw,              // single-ring energies and interaction
  kInteractionOnly,  // single-ring phases e^{-i E_n t / hbar} factored out
};

// Diagonal evolution exp(-i (E_a + E_b + H_M) t / hbar).
TwoQubitState evolve_two_qubit(const TwoQubitState& initial, const TwoRingConfig& config,
                               double t, PhaseGauge gauge = PhaseGauge::kRaw);

// Gauge-invariant conditional phase arg(c00 c22 / (c02 c20)) accumulated by
// the raw evolution, wrapped into (-pi, pi]. After removing a global phase
// and the two single-qubit Z rotations the phase vector is (0, 0, 0, chi),
// with chi = -controlled_phase(t) mod 2 pi.
double conditional_phase(const TwoRingConfig& config, double t);

// Process fidelity |Tr(CZ^dag U)|^2 / 16 of the gauge-fixed evolution.
double cz_fidelity(const TwoRingConfig& config, double t);

// Schmidt coefficients (descending) of a two-qubit state.
std::array<double, 2> schmidt_coefficients(const TwoQubitState& state);

}  // namespace fluxring

#endif  // FLUXRING_TWO_QUBIT_H_
