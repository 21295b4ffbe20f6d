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

#ifndef FLUXRING_COUPLING_H_
#define FLUXRING_COUPLING_H_

#include <complex>
#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fluxring/beam.h"
#include "fluxring/ring.h"

namespace fluxring {

// One harmonic piece amplitude * exp(i beat t) of <m|H_I|n>(t).
//
// In the eigenbasis Psi_n ~ exp(-i(n phi + omega_n t)) the beat is
// omega_{m,n} - photons * omega, where photons is the net time sign of the
// drive harmonics involved (+-1 for the A-linear part, -2, 0, +2 for A^2).
struct MatrixElementTerm {
  std::complex<double> amplitude;  // J
  double beat = 0.0;               // rad/s
  int order = 1;                   // power of A0
  int photons = 0;
  double beat_residual = 0.0;      // beat rounding error: exact = beat + residual
};

// Closed-form contraction of the interaction Hamiltonian
//   H_I = (i hbar q* / 2 m* r)(L_K/L_T)(d_phi A + A d_phi) + (q*^2 / 2 m*) A^2
// between ring eigenstates. Terms sharing (order, photons) are merged and
// exact zeros dropped; diagonal (m == n) shifts are retained.
// Throws TruncationExceeded if |m| or |n| exceeds n_max.
std::vector<MatrixElementTerm> matrix_element_terms(int m, int n,
                                                    const HarmonicDrive& drive,
                                                    const RingParams& params,
                                                    int n_max = kDefaultNMax);

// Sum of amplitude * exp(i beat t).
std::complex<double> evaluate_terms(std::span<const MatrixElementTerm> terms, double t);

// <m|H_I|n>(t) by direct trapezoidal quadrature over phi of
// Psi_m^* H_I Psi_n, with A_phi and d A_phi / d phi sampled pointwise from the
// drive. Independent of matrix_element_terms.
std::complex<double> matrix_element_quadrature(int m, int n, const HarmonicDrive& drive,
                                               const RingParams& params, double t,
                                               int n_max = kDefaultNMax,
                                               int points = 512);

struct SelectionRule {
  int delta_n = 0;
  int order = 1;

  auto operator<=>(const SelectionRule&) const = default;
};

// Winding changes the drive can induce: order 1 from each harmonic k != 0,
// order 2 from every pairwise sum k1 + k2 != 0.
std::set<SelectionRule> selection_rules(const HarmonicDrive& drive);

struct TransitionCatalogEntry {
  int initial = 0;
  int final = 0;
  double required_omega = 0.0;  // rad/s, > 0
  int order = 1;
  int photons = 1;
  double coupling = 0.0;  // |amplitude| of the resonant term, J
  std::string source;
};

// Beam frequencies at which some term of <m|H_I|n_init> stops beating, for
// every m in the basis: omega = omega_{m,n} / photons, positive only.
// Sorted by order, then |dn|, then final level.
std::vector<TransitionCatalogEntry> resonance_catalog(const HarmonicDrive& drive,
                                                      const RingParams& params,
                                                      int n_init,
                                                      int n_max = kDefaultNMax);

// Omega = (N* q* / r m*)(L_K / L_T)|A0| for the 0 <-> 2 transition under a
// linearly polarized LG_0^1 beam at resonance.
double rabi_frequency(const RingParams& params, double a0_magnitude);

}  // namespace fluxring

#endif  // FLUXRING_COUPLING_H_
