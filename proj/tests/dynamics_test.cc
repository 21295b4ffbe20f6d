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
#include <complex>
#include <random>
#include <vector>

#include "fluxring/constants.h"
#include "fluxring/coupling.h"
#include "fluxring/errors.h"
#include "gtest/gtest.h"
#include "rabi_fit.h"
#include "test_util.h"

namespace fluxring {
namespace {

using constants::kCooperCharge;
using constants::kPi;
using testing::fit_rabi_frequency;
using testing::paper_params;
using testing::relative_error;
using Complex = std::complex<double>;

constexpr double kPaperA0 = 8.6e-14;

BeamDrive resonant_drive(const RingParams& params, int l = 1, double a0 = kPaperA0) {
  BeamDrive beam;
  beam.oam_index = l;
  beam.omega = transition_angular_frequency(2, 0, params);
  beam.a0 = a0;
  beam.polarization = Polarization::LinearX();
  return beam;
}

double rabi_period(const RingParams& params) {
  return 2.0 * kPi / rabi_frequency(params, kPaperA0);
}

double leakage(const Trajectory& trajectory, std::size_t sample) {
  const int n_max = trajectory.states[sample].n_max();
  double sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    if (n != 0 && n != 2) sum += trajectory.population(sample, n);
  }
  return sum;
}

// Three Rabi periods of full-mode evolution at the reference drive, shared by
// the tests that inspect it.
const Trajectory& full_mode_run() {
  static const Trajectory trajectory = [] {
    const RingParams params = paper_params();
    EvolveOptions options;
    options.samples = 301;
    return evolve(StateVector::basis_state(kDefaultNMax, 0), resonant_drive(params), params,
                  3.0 * rabi_period(params), 1e-10, EvolutionMode::kFull, options);
  }();
  return trajectory;
}

TEST(state_vector, construction) {
  const auto ground = StateVector::basis_state(4, 0);
  EXPECT_EQ(ground.size(), 9u);
  EXPECT_EQ(ground.population(0), 1.0);
  EXPECT_EQ(ground.norm(), 1.0);
  EXPECT_THROW(ground.amplitude(5), TruncationExceeded);
  EXPECT_THROW(StateVector::basis_state(2, 3), TruncationExceeded);

  const auto cat = StateVector::superposition(4, {{0, 1.0}, {2, Complex{0.0, 1.0}}});
  EXPECT_NEAR(cat.population(0), 0.5, 1e-15);
  EXPECT_NEAR(cat.population(2), 0.5, 1e-15);
  EXPECT_NEAR(cat.norm(), 1.0, 1e-15);
  EXPECT_THROW(StateVector::superposition(2, {{1, 0.0}}), ValidationError);
  EXPECT_THROW(StateVector(2, ComplexVector(4)), ValidationError);
}

TEST(evolve, validates_inputs) {
  const RingParams params = paper_params();
  const auto ground = StateVector::basis_state(4, 0);
  const BeamDrive beam = resonant_drive(params);
  EXPECT_THROW(evolve(ground, beam, params, 1e-12, 1e-14, EvolutionMode::kRwa), ValidationError);
  EXPECT_THROW(evolve(ground, beam, params, 1e-12, 1e-5, EvolutionMode::kRwa), ValidationError);
  EXPECT_THROW(evolve(ground, beam, params, 0.0, 1e-10, EvolutionMode::kRwa), ValidationError);
  EXPECT_THROW(evolve(StateVector(4, ComplexVector(9, 1.0)), beam, params, 1e-12, 1e-10,
                      EvolutionMode::kRwa),
               ValidationError);
  EvolveOptions unordered;
  unordered.sample_times = {2e-12, 1e-12};
  EXPECT_THROW(evolve(ground, beam, params, 2e-12, 1e-10, EvolutionMode::kRwa, unordered),
               ValidationError);
}

TEST(evolve, zero_drive_is_stationary) {
  const RingParams params = paper_params();
  const auto trajectory = evolve(StateVector::basis_state(kDefaultNMax, 0),
                                 resonant_drive(params, 1, 0.0), params, 1e-10, 1e-10,
                                 EvolutionMode::kFull);
  ASSERT_EQ(trajectory.times.size(), 101u);
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    EXPECT_EQ(trajectory.population(k, 0), 1.0);
  }
}

TEST(evolve, sample_grid) {
  const RingParams params = paper_params();
  EvolveOptions options;
  options.samples = 11;
  const auto trajectory = evolve(StateVector::basis_state(2, 0, 5e-12), resonant_drive(params),
                                 params, 1e-12, 1e-10, EvolutionMode::kRwa, options);
  ASSERT_EQ(trajectory.times.size(), 11u);
  EXPECT_EQ(trajectory.times.front(), 5e-12);
  EXPECT_EQ(trajectory.times.back(), 5e-12 + 1e-12);
  for (std::size_t k = 1; k < trajectory.times.size(); ++k) {
    EXPECT_GT(trajectory.times[k], trajectory.times[k - 1]);
    EXPECT_EQ(trajectory.states[k].reference_time(), trajectory.times[k]);
  }
  EXPECT_EQ(trajectory.populations[3][2 + 2], trajectory.population(3, 2));
}

TEST(evolve, rwa_matches_two_level_rabi_solution) {
  const RingParams params = paper_params();
  const double rabi = rabi_frequency(params, kPaperA0);
  EvolveOptions options;
  options.samples = 601;
  const auto trajectory =
      evolve(StateVector::basis_state(kDefaultNMax, 0), resonant_drive(params), params,
             3.0 * rabi_period(params), 1e-10, EvolutionMode::kRwa, options);
  double worst = 0.0;
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    const double s = std::sin(0.5 * rabi * trajectory.times[k]);
    worst = std::max(worst, std::abs(trajectory.population(k, 2) - s * s));
  }
  EXPECT_LT(worst, 1e-3);
  // The RWA keeps a closed two-level system, so agreement is in fact far tighter.
  EXPECT_LT(worst, 1e-8);
  EXPECT_LT(trajectory.max_norm_drift(), 10 * 1e-10);
}

TEST(evolve, rwa_cutoff_override) {
  const RingParams params = paper_params();
  // Detuned by 5%: the resonant term survives the default cutoff but not a 1% one.
  BeamDrive beam = resonant_drive(params);
  beam.omega *= 1.05;
  EvolveOptions narrow;
  narrow.rwa_cutoff = 0.01;
  const auto frozen = evolve(StateVector::basis_state(4, 0), beam, params, rabi_period(params),
                             1e-10, EvolutionMode::kRwa, narrow);
  // Only the common diagonal shift remains.
  for (std::size_t k = 0; k < frozen.times.size(); ++k) {
    EXPECT_NEAR(frozen.population(k, 0), 1.0, 1e-14);
    EXPECT_EQ(frozen.population(k, 2), 0.0);
  }
  const auto driven = evolve(StateVector::basis_state(4, 0), beam, params, rabi_period(params),
                             1e-10, EvolutionMode::kRwa);
  double peak = 0.0;
  for (std::size_t k = 0; k < driven.times.size(); ++k) {
    peak = std::max(peak, driven.population(k, 2));
  }
  EXPECT_GT(peak, 0.0);
  EXPECT_LT(peak, 1e-3);  // far detuned: (Omega / Delta)^2 scale
}

TEST(evolve, full_mode_rabi_frequency) {
  const RingParams params = paper_params();
  const double rabi = rabi_frequency(params, kPaperA0);
  const Trajectory& trajectory = full_mode_run();
  EXPECT_LT(relative_error(fit_rabi_frequency(trajectory, rabi), rabi), 0.02);
  EXPECT_LT(trajectory.max_norm_drift(), 10 * 1e-10);
}

TEST(evolve, full_mode_leakage_regression) {
  // Measured peak of sum_{n != 0, 2} P_n over three Rabi periods; reproduced
  // to 1e-6 relative at tol = 1e-12 and at n_max = 16.
  constexpr double kFrozenLeakage = 4.3178e-8;
  const Trajectory& trajectory = full_mode_run();
  double peak = 0.0;
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    peak = std::max(peak, leakage(trajectory, k));
  }
  EXPECT_LT(peak, 5e-2);
  EXPECT_NEAR(peak, kFrozenLeakage, 1e-3 * kFrozenLeakage);
}

TEST(evolve, lg01_does_not_populate_minus_two) {
  const Trajectory& trajectory = full_mode_run();
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    EXPECT_LT(trajectory.population(k, -2), 1e-6) << trajectory.times[k];
  }
}

TEST(evolve, oam_sign_mirrors_winding) {
  const RingParams params = paper_params();
  EvolveOptions options;
  options.samples = 41;
  const double span = rabi_period(params);
  const auto plus = evolve(StateVector::basis_state(kDefaultNMax, 0), resonant_drive(params, 1),
                           params, span, 1e-10, EvolutionMode::kFull, options);
  const auto minus =
      evolve(StateVector::basis_state(kDefaultNMax, 0), resonant_drive(params, -1), params, span,
             1e-10, EvolutionMode::kFull, options);
  double worst = 0.0;
  for (std::size_t k = 0; k < plus.times.size(); ++k) {
    for (int n = -kDefaultNMax; n <= kDefaultNMax; ++n) {
      worst = std::max(worst, std::abs(plus.population(k, n) - minus.population(k, -n)));
    }
  }
  EXPECT_LT(worst, 1e-12);
  EXPECT_GT(minus.population(20, -2), 0.99);
}

TEST(evolve, truncation_converged) {
  const RingParams params = paper_params();
  EvolveOptions options;
  options.samples = 41;
  const double span = rabi_period(params);
  const auto small = evolve(StateVector::basis_state(kDefaultNMax, 0), resonant_drive(params),
                            params, span, 1e-12, EvolutionMode::kFull, options);
  const auto large = evolve(StateVector::basis_state(2 * kDefaultNMax, 0),
                            resonant_drive(params), params, span, 1e-12, EvolutionMode::kFull,
                            options);
  for (std::size_t k = 0; k < small.times.size(); ++k) {
    for (int n = -kDefaultNMax; n <= kDefaultNMax; ++n) {
      EXPECT_NEAR(small.population(k, n), large.population(k, n), 1e-8);
    }
  }
}

TEST(evolve, deterministic) {
  const RingParams params = paper_params();
  EvolveOptions options;
  options.samples = 5;
  const auto run = [&] {
    return evolve(StateVector::basis_state(4, 0), resonant_drive(params), params, 1e-12, 1e-10,
                  EvolutionMode::kFull, options);
  };
  const auto first = run();
  const auto second = run();
  for (std::size_t k = 0; k < first.times.size(); ++k) {
    EXPECT_EQ(first.states[k].amplitudes(), second.states[k].amplitudes());
  }
}

TEST(density_profile, ground_state_is_uniform) {
  const RingParams params = paper_params();
  const auto ground = StateVector::basis_state(4, 0);
  for (double phi : {0.0, 1.0, 2.5, 6.0}) {
    EXPECT_LT(relative_error(density_profile(ground, params, phi, 3e-13),
                             params.pair_count / (2 * kPi)),
              1e-14);
  }
}

TEST(density_profile, zero_two_interference) {
  const RingParams params = paper_params();
  const auto cat = StateVector::superposition(4, {{0, 1.0}, {2, 1.0}});
  const double base = params.pair_count / (2 * kPi);
  for (int k = 0; k < 16; ++k) {
    const double phi = 2 * kPi * k / 16;
    EXPECT_NEAR(density_profile(cat, params, phi, 0.0), base * (1 + std::cos(2 * phi)),
                1e-12 * base);
  }
  EXPECT_LT(density_profile(cat, params, kPi / 2, 0.0), 1e-12 * base);
  EXPECT_LT(density_profile(cat, params, 3 * kPi / 2, 0.0), 1e-12 * base);
}

TEST(density_profile, zero_one_single_lobe) {
  const RingParams params = paper_params();
  const auto state = StateVector::superposition(4, {{0, 1.0}, {1, 1.0}});
  const double base = params.pair_count / (2 * kPi);
  const double t = 1.3e-15;
  const double w10 = transition_angular_frequency(1, 0, params);
  for (int k = 0; k < 16; ++k) {
    const double phi = 2 * kPi * k / 16;
    EXPECT_NEAR(density_profile(state, params, phi, t), base * (1 + std::cos(phi + w10 * t)),
                1e-11 * base);
  }
}

TEST(density_profile, integrates_to_pair_count) {
  const RingParams params = paper_params();
  auto rng = testing::test_rng();
  std::normal_distribution<double> gauss;
  ComplexVector amplitudes(9);
  for (auto& c : amplitudes) c = {gauss(rng), gauss(rng)};
  double norm = 0.0;
  for (const auto& c : amplitudes) norm += std::norm(c);
  for (auto& c : amplitudes) c /= std::sqrt(norm);
  const StateVector state(4, amplitudes);
  for (double t : {0.0, 1e-15, 7e-12}) {
    // 64 nodes integrate harmonics up to |n - m| = 8 exactly.
    double total = 0.0;
    for (int p = 0; p < 64; ++p) total += density_profile(state, params, 2 * kPi * p / 64, t);
    EXPECT_LT(relative_error(total * 2 * kPi / 64, params.pair_count), 1e-10);
  }
}

TEST(dipole_moment, even_superpositions_have_none) {
  const RingParams params = paper_params();
  const double unit = kCooperCharge * params.pair_count * params.design.radius;
  auto rng = testing::test_rng();
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex c0 = std::polar(uniform(rng), 2 * kPi * uniform(rng));
    const Complex c2 = std::polar(uniform(rng), 2 * kPi * uniform(rng));
    const auto state = StateVector::superposition(4, {{0, c0}, {2, c2}});
    const auto p = dipole_moment(state, params, 1e-11 * uniform(rng));
    EXPECT_LT(std::hypot(p[0], p[1]), 1e-12 * unit);
  }
  for (int n : {-2, 0, 1, 3}) {
    const auto p = dipole_moment(StateVector::basis_state(4, n), params, 2e-13);
    EXPECT_LT(std::hypot(p[0], p[1]), 1e-14 * unit) << n;
  }
}

TEST(dipole_moment, zero_one_superposition_rotates) {
  const RingParams params = paper_params();
  const double unit = kCooperCharge * params.pair_count * params.design.radius;
  const auto state = StateVector::superposition(4, {{0, 1.0}, {1, 1.0}});
  const double w10 = transition_angular_frequency(1, 0, params);
  for (double t : {0.0, 0.3e-15, 1.1e-15, 4e-12}) {
    const auto p = dipole_moment(state, params, t);
    EXPECT_LT(relative_error(std::hypot(p[0], p[1]), unit / 2), 1e-10);
    // (cos theta, -sin theta) with theta = omega_10 t.
    EXPECT_NEAR(p[0], 0.5 * unit * std::cos(w10 * t), 1e-10 * unit);
    EXPECT_NEAR(p[1], -0.5 * unit * std::sin(w10 * t), 1e-10 * unit);
  }
}

TEST(pattern_rotation_check, zero_two_rotates_at_half_transition) {
  const RingParams params = paper_params();
  const auto state = StateVector::superposition(4, {{0, 1.0}, {2, 1.0}});
  const double w20 = transition_angular_frequency(2, 0, params);
  for (double dt : {1e-17, 3e-16, 2e-15}) {
    const double v = pattern_rotation_check(state, params, dt);
    EXPECT_LT(relative_error(std::abs(v), w20 / 2), 1e-14);
    EXPECT_LT(v, 0.0);
  }
}

TEST(pattern_rotation_check, zero_one_rotates_at_transition) {
  const RingParams params = paper_params();
  const auto state = StateVector::superposition(4, {{0, 1.0}, {1, Complex{0.0, 1.0}}}, 2e-15);
  const double v = pattern_rotation_check(state, params, 5e-16);
  EXPECT_LT(relative_error(std::abs(v), transition_angular_frequency(1, 0, params)), 1e-14);
}

TEST(pattern_rotation_check, degenerate_pair_is_stationary) {
  const RingParams params = paper_params();
  const auto state = StateVector::superposition(4, {{2, 1.0}, {-2, 1.0}});
  EXPECT_EQ(pattern_rotation_check(state, params, 1e-15), 0.0);
}

TEST(pattern_rotation_check, requires_two_levels) {
  const RingParams params = paper_params();
  EXPECT_THROW(pattern_rotation_check(StateVector::basis_state(4, 0), params, 1e-15),
               NotTwoLevel);
  EXPECT_THROW(pattern_rotation_check(
                   StateVector::superposition(4, {{0, 1.0}, {1, 1.0}, {2, 1.0}}), params, 1e-15),
               NotTwoLevel);
}

}  // namespace
}  // namespace fluxring
