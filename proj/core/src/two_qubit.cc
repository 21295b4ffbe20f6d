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

#include "fluxring/two_qubit.h"

#include <cmath>
#include <numbers>

#include "fluxring/constants.h"
#include "fluxring/errors.h"

namespace fluxring {

namespace {

using constants::kHbar;
using constants::kPi;

constexpr std::array<int, 2> kLevels = {0, 2};

// e^{-i E t / hbar}. Single-ring phases reach ~1e6 rad at gate times, so the
// product and its reduction mod 2 pi run in extended precision.
std::complex<double> phase(double energy, double t) {
  const long double angle = static_cast<long double>(energy) * t / kHbar;
  const long double reduced = std::remainder(angle, 2 * std::numbers::pi_v<long double>);
  return std::polar(1.0, -static_cast<double>(reduced));
}

}  // namespace

double mutual_inductance_coaxial(double radius, double separation) {
  if (!(radius > 0.0)) throw ValidationError("radius", "must be positive");
  if (!(separation > 0.0)) throw ValidationError("separation", "must be positive");
  const double r2 = radius * radius;
  return constants::kMu0 * kPi * r2 * r2 / (2.0 * separation * separation * separation);
}

bool coaxial_far_field(double radius, double separation) {
  return separation >= 10.0 * radius;
}

TwoRingConfig TwoRingConfig::Coaxial(const RingParams& a, const RingParams& b,
                                     double separation) {
  if (!(separation > 0.0)) throw ValidationError("separation", "must be positive");
  const double ra = a.design.radius;
  const double rb = b.design.radius;
  const double mutual = constants::kMu0 * kPi * (ra * ra) * (rb * rb) /
                        (2.0 * separation * separation * separation);
  return Explicit(a, b, separation, mutual);
}

TwoRingConfig TwoRingConfig::Explicit(const RingParams& a, const RingParams& b,
                                      double separation, double mutual_inductance) {
  TwoRingConfig config;
  config.ring_a = a;
  config.ring_b = b;
  config.separation = separation;
  config.mutual_inductance = mutual_inductance;
  config.validate();
  return config;
}

void TwoRingConfig::validate() const {
  if (!(separation > 0.0)) throw ValidationError("separation", "must be positive");
  if (!(mutual_inductance > 0.0)) {
    throw ValidationError("mutual_inductance", "must be positive");
  }
  if (!(ring_a.total_inductance > 0.0) || !(ring_b.total_inductance > 0.0)) {
    throw ValidationError("total_inductance", "ring parameters are not initialized");
  }
}

double interaction_energy(int n_a, int n_b, const TwoRingConfig& config) {
  if (!config.coupling_enabled) return 0.0;
  return config.mutual_inductance * level_supercurrent(n_a, config.ring_a) *
         level_supercurrent(n_b, config.ring_b);
}

double cz_gate_time(const TwoRingConfig& config) {
  const double energy = interaction_energy(2, 2, config);
  if (!(energy > 0.0)) {
    throw ValidationError("coupling_enabled", "no interaction while the coupling is off");
  }
  return kPi * kHbar / energy;
}

double controlled_phase(double t, const TwoRingConfig& config) {
  if (!(t >= 0.0)) throw ValidationError("t", "must be non-negative");
  return interaction_energy(2, 2, config) * t / kHbar;
}

std::size_t two_qubit_index(int n_a, int n_b) {
  if ((n_a != 0 && n_a != 2) || (n_b != 0 && n_b != 2)) {
    throw TruncationExceeded("two-qubit basis holds levels 0 and 2 only");
  }
  return static_cast<std::size_t>(n_a + n_b / 2);
}

TwoQubitState make_two_qubit_state(const TwoQubitState& amplitudes) {
  double norm = 0.0;
  for (const auto& c : amplitudes) norm += std::norm(c);
  if (!(norm > 0.0)) throw ValidationError("state", "zero norm");
  TwoQubitState state = amplitudes;
  for (auto& c : state) c /= std::sqrt(norm);
  return state;
}

TwoQubitState evolve_two_qubit(const TwoQubitState& initial, const TwoRingConfig& config,
                               double t, PhaseGauge gauge) {
  TwoQubitState out = initial;
  for (int n_a : kLevels) {
    for (int n_b : kLevels) {
      std::complex<double> factor = phase(interaction_energy(n_a, n_b, config), t);
      if (gauge == PhaseGauge::kRaw) {
        factor *= phase(level_energy(n_a, config.ring_a), t) *
                  phase(level_energy(n_b, config.ring_b), t);
      }
      out[two_qubit_index(n_a, n_b)] *= factor;
    }
  }
  return out;
}

double conditional_phase(const TwoRingConfig& config, double t) {
  const TwoQubitState plus = make_two_qubit_state({1.0, 1.0, 1.0, 1.0});
  const TwoQubitState s = evolve_two_qubit(plus, config, t, PhaseGauge::kRaw);
  return std::arg(s[0] * s[3] * std::conj(s[1]) * std::conj(s[2]));
}

double cz_fidelity(const TwoRingConfig& config, double t) {
  const double chi = conditional_phase(config, t);
  // CZ^dag diag(1, 1, 1, e^{i chi}) has trace 3 - e^{i chi}.
  return std::norm(3.0 - std::polar(1.0, chi)) / 16.0;
}

std::array<double, 2> schmidt_coefficients(const TwoQubitState& state) {
  const auto& [a, b, c, d] = state;
  // Eigenvalues of M M^dag for M = [[a, b], [c, d]], written so that the
  // splitting stays accurate near maximal entanglement.
  const double top = std::norm(a) + std::norm(b);
  const double bottom = std::norm(c) + std::norm(d);
  const std::complex<double> off = a * std::conj(c) + b * std::conj(d);
  const double split = std::hypot(top - bottom, 2.0 * std::abs(off));
  const double total = top + bottom;
  return {std::sqrt((total + split) / 2.0), std::sqrt(std::max(0.0, (total - split) / 2.0))};
}

}  // namespace fluxring
