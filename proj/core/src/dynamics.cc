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

#include "fluxring/dynamics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fluxring/constants.h"
#include "fluxring/coupling.h"
#include "fluxring/errors.h"

namespace fluxring {

namespace {

using constants::kHbar;
using constants::kPi;

constexpr int kMaxPhotons = 2;

// One nonzero harmonic of V_mn(t) / hbar, with the beat factored as
// e^{i omega_m t} e^{-i omega_n t} e^{-i photons omega t}.
struct Coupling {
  std::size_t row;
  std::size_t col;
  std::complex<double> rate;  // amplitude / hbar, rad/s
  int photons;
};

std::vector<Coupling> build_couplings(const HarmonicDrive& drive, const RingParams& params,
                                      int n_max, EvolutionMode mode, double rwa_cutoff) {
  std::vector<Coupling> couplings;
  for (int m = -n_max; m <= n_max; ++m) {
    for (int n = -n_max; n <= n_max; ++n) {
      for (const auto& term : matrix_element_terms(m, n, drive, params, n_max)) {
        if (mode == EvolutionMode::kRwa && !(std::abs(term.beat) < rwa_cutoff * drive.omega)) {
          continue;
        }
        couplings.push_back({static_cast<std::size_t>(m + n_max),
                             static_cast<std::size_t>(n + n_max), term.amplitude / kHbar,
                             term.photons});
      }
    }
  }
  return couplings;
}

void check_tolerance(double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-6)) {
    throw ValidationError("tol", "must lie in [1e-13, 1e-6]");
  }
}

std::complex<double> order_parameter(const StateVector& state, const RingParams& params,
                                     double phi, double t) {
  std::complex<double> psi{0.0, 0.0};
  const int n_max = state.n_max();
  for (int n = -n_max; n <= n_max; ++n) {
    const std::complex<double> c = state.amplitudes()[state.index(n)];
    if (c == std::complex<double>{0.0, 0.0}) continue;
    psi += c * std::polar(1.0, -(n * phi + level_angular_frequency(n, params) * t));
  }
  return psi;
}

}  // namespace

StateVector StateVector::basis_state(int n_max, int n, double reference_time) {
  if (n_max < 0) throw ValidationError("n_max", "must be non-negative");
  ComplexVector amplitudes(2 * static_cast<std::size_t>(n_max) + 1);
  StateVector state(n_max, std::move(amplitudes), reference_time);
  state.amplitudes_[state.index(n)] = 1.0;
  return state;
}

StateVector StateVector::superposition(
    int n_max, std::initializer_list<std::pair<int, std::complex<double>>> components,
    double reference_time) {
  if (n_max < 0) throw ValidationError("n_max", "must be non-negative");
  ComplexVector amplitudes(2 * static_cast<std::size_t>(n_max) + 1);
  StateVector state(n_max, std::move(amplitudes), reference_time);
  double norm = 0.0;
  for (const auto& [n, c] : components) {
    state.amplitudes_[state.index(n)] += c;
  }
  for (const auto& c : state.amplitudes_) norm += std::norm(c);
  if (!(norm > 0.0)) throw ValidationError("state", "superposition has zero norm");
  for (auto& c : state.amplitudes_) c /= std::sqrt(norm);
  return state;
}

StateVector::StateVector(int n_max, ComplexVector amplitudes, double reference_time)
    : n_max_(n_max), amplitudes_(std::move(amplitudes)), reference_time_(reference_time) {
  if (n_max_ < 0 || amplitudes_.size() != 2 * static_cast<std::size_t>(n_max_) + 1) {
    throw ValidationError("state", "amplitude count must be 2 n_max + 1");
  }
}

std::size_t StateVector::index(int n) const {
  if (std::abs(n) > n_max_) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "level %d outside basis |n| <= %d", n, n_max_);
    throw TruncationExceeded(msg);
  }
  return static_cast<std::size_t>(n + n_max_);
}

std::complex<double> StateVector::amplitude(int n) const { return amplitudes_[index(n)]; }

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& c : amplitudes_) sum += std::norm(c);
  return sum;
}

double Trajectory::population(std::size_t sample, int n) const {
  return states.at(sample).population(n);
}

double Trajectory::max_norm_drift() const {
  double drift = 0.0;
  for (const auto& state : states) drift = std::max(drift, std::abs(state.norm() - 1.0));
  return drift;
}

Trajectory evolve(const StateVector& initial, const BeamDrive& beam, const RingParams& params,
                  double t_final, double tol, EvolutionMode mode,
                  const EvolveOptions& options) {
  check_tolerance(tol);
  if (!(t_final > 0.0)) throw ValidationError("t_final", "must be positive");
  if (std::abs(initial.norm() - 1.0) > 1e-9) {
    throw ValidationError("state", "initial state must be unit-normalized");
  }
  if (!(options.rwa_cutoff > 0.0)) throw ValidationError("rwa_cutoff", "must be positive");

  const int n_max = initial.n_max();
  const std::size_t dim = initial.size();
  const double t0 = initial.reference_time();
  const HarmonicDrive drive = azimuthal_component(beam);
  const std::vector<Coupling> couplings =
      build_couplings(drive, params, n_max, mode, options.rwa_cutoff);

  std::vector<double> level_omega(dim);
  for (int n = -n_max; n <= n_max; ++n) {
    level_omega[static_cast<std::size_t>(n + n_max)] = level_angular_frequency(n, params);
  }

  std::vector<double> times = options.sample_times;
  if (times.empty()) {
    const std::size_t samples = std::max<std::size_t>(options.samples, 2);
    times.resize(samples);
    for (std::size_t k = 0; k < samples; ++k) {
      times[k] = t0 + t_final * static_cast<double>(k) / static_cast<double>(samples - 1);
    }
    times.back() = t0 + t_final;
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < t0 || (k > 0 && !(times[k] > times[k - 1]))) {
      throw ValidationError("sample_times", "must be strictly increasing and >= t0");
    }
  }

  ComplexVector level_phase(dim);
  ComplexVector lab(dim);
  ComplexVector acc(dim);
  std::array<std::complex<double>, 2 * kMaxPhotons + 1> photon_phase;
  const double omega = drive.omega;

  ComplexRhs rhs = [&](double t, std::span<const std::complex<double>> c,
                       std::span<std::complex<double>> dcdt) {
    for (std::size_t i = 0; i < dim; ++i) {
      level_phase[i] = std::polar(1.0, -level_omega[i] * t);
      lab[i] = level_phase[i] * c[i];
      acc[i] = 0.0;
    }
    for (int j = -kMaxPhotons; j <= kMaxPhotons; ++j) {
      photon_phase[static_cast<std::size_t>(j + kMaxPhotons)] = std::polar(1.0, -j * omega * t);
    }
    for (const auto& k : couplings) {
      acc[k.row] +=
          k.rate * photon_phase[static_cast<std::size_t>(k.photons + kMaxPhotons)] * lab[k.col];
    }
    for (std::size_t i = 0; i < dim; ++i) {
      dcdt[i] = std::complex<double>{0.0, -1.0} * std::conj(level_phase[i]) * acc[i];
    }
  };

  Trajectory trajectory;
  trajectory.times = times;
  trajectory.states.reserve(times.size());
  trajectory.populations.reserve(times.size());
  IntegratorOptions integrator;
  integrator.tol = tol;
  trajectory.stats = integrate_dormand_prince(
      rhs, t0, initial.amplitudes(), times, integrator,
      [&](std::size_t, double t, std::span<const std::complex<double>> c) {
        trajectory.states.emplace_back(n_max, ComplexVector(c.begin(), c.end()), t);
        std::vector<double> populations(dim);
        for (std::size_t i = 0; i < dim; ++i) populations[i] = std::norm(c[i]);
        trajectory.populations.push_back(std::move(populations));
      });
  return trajectory;
}

double density_profile(const StateVector& state, const RingParams& params, double phi,
                       double t) {
  return params.pair_count * std::norm(order_parameter(state, params, phi, t)) / (2.0 * kPi);
}

std::array<double, 2> dipole_moment(const StateVector& state, const RingParams& params,
                                    double t) {
  constexpr int kPoints = 512;
  const double step = 2.0 * kPi / kPoints;
  double px = 0.0, py = 0.0;
  for (int p = 0; p < kPoints; ++p) {
    const double phi = p * step;
    const double rho = density_profile(state, params, phi, t);
    px += rho * std::cos(phi);
    py += rho * std::sin(phi);
  }
  const double scale = constants::kCooperCharge * params.design.radius * step;
  return {scale * px, scale * py};
}

double pattern_rotation_check(const StateVector& state, const RingParams& params, double dt) {
  double largest = 0.0;
  for (const auto& c : state.amplitudes()) largest = std::max(largest, std::abs(c));
  std::vector<int> levels;
  for (int n = -state.n_max(); n <= state.n_max(); ++n) {
    if (std::abs(state.amplitude(n)) > 1e-12 * largest) levels.push_back(n);
  }
  if (levels.size() != 2) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "state populates %zu levels, expected 2", levels.size());
    throw NotTwoLevel(msg);
  }
  const int n1 = levels[0];
  const int n2 = levels[1];
  const double velocity = -transition_angular_frequency(n2, n1, params) / (n2 - n1) + 0.0;

  constexpr int kPoints = 100;
  const double t = state.reference_time();
  double peak = 0.0;
  std::array<double, kPoints> later{};
  for (int k = 0; k < kPoints; ++k) {
    const double phi = 2.0 * kPi * (k + 0.5) / kPoints;
    later[k] = density_profile(state, params, phi, t + dt);
    peak = std::max(peak, later[k]);
  }
  for (int k = 0; k < kPoints; ++k) {
    const double phi = 2.0 * kPi * (k + 0.5) / kPoints;
    const double shifted = density_profile(state, params, phi - velocity * dt, t);
    if (std::abs(shifted - later[k]) > 1e-10 * peak) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "density is not rigidly rotating at phi = %.6g: %.12g vs %.12g", phi,
                    later[k], shifted);
      throw NumericalError(msg);
    }
  }
  return velocity;
}

}  // namespace fluxring
