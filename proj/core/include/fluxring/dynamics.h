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

#ifndef FLUXRING_DYNAMICS_H_
#define FLUXRING_DYNAMICS_H_

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fluxring/beam.h"
#include "fluxring/ode.h"
#include "fluxring/ring.h"

namespace fluxring {

// Interaction-picture amplitudes c_n over the winding basis |n| <= n_max.
// The lab-frame order parameter is sum_n c_n Psi_n(phi, t).
class StateVector {
 public:
  // |n> for a basis of the given size.
  static StateVector basis_state(int n_max, int n, double reference_time = 0.0);
  // Normalized superposition of the listed (level, amplitude) pairs.
  static StateVector superposition(int n_max,
                                   std::initializer_list<std::pair<int, std::complex<double>>>
                                       components,
                                   double reference_time = 0.0);

  StateVector(int n_max, ComplexVector amplitudes, double reference_time = 0.0);

  int n_max() const { return n_max_; }
  double reference_time() const { return reference_time_; }
  std::size_t size() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  // Throws TruncationExceeded when |n| > n_max.
  std::complex<double> amplitude(int n) const;
  double population(int n) const { return std::norm(amplitude(n)); }
  double norm() const;

  std::size_t index(int n) const;

 private:
  int n_max_;
  ComplexVector amplitudes_;
  double reference_time_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  // populations[k][i] = |c_{i - n_max}(times[k])|^2.
  std::vector<std::vector<double>> populations;
  IntegrationStats stats;

  double population(std::size_t sample, int n) const;
  // max_k |norm(states[k]) - 1|.
  double max_norm_drift() const;
};

enum class EvolutionMode { kFull, kRwa };

struct EvolveOptions {
  // Terms with |beat| >= rwa_cutoff * omega are dropped in RWA mode.
  double rwa_cutoff = 0.1;
  // Uniform samples over [t0, t0 + t_final], both ends included, unless
  // sample_times is supplied (absolute times).
  std::size_t samples = 101;
  std::vector<double> sample_times;
};

// Integrates i hbar dc_m/dt = sum_n V_mn(t) c_n, with V_mn(t) the harmonic
// term expansion of <m|H_I|n>, from initial.reference_time() for t_final.
// tol in [1e-13, 1e-6] bounds the local error per step.
Trajectory evolve(const StateVector& initial, const BeamDrive& beam, const RingParams& params,
                  double t_final, double tol, EvolutionMode mode,
                  const EvolveOptions& options = {});

// Cooper-pair density along the ring, N* |sum_n c_n e^{-i(n phi + omega_n t)}|^2 / 2pi,
// per radian of phi (divide by r for pairs per meter of arc). Integrates to N*.
double density_profile(const StateVector& state, const RingParams& params, double phi,
                       double t);

// q* r * integral of density * (cos phi, sin phi) dphi, by 512-point quadrature.
std::array<double, 2> dipole_moment(const StateVector& state, const RingParams& params,
                                    double t);

// Signed angular velocity v of a two-level density pattern, defined by
// rho(phi, t + dt) = rho(phi - v dt, t). With the e^{-i n phi} basis this is
// v = -omega_{n2,n1} / (n2 - n1); its magnitude is the pattern rotation rate.
// Verifies the rigid-rotation identity at 100 points to 1e-10 relative and
// throws NumericalError if it fails; NotTwoLevel unless exactly two levels
// are populated.
double pattern_rotation_check(const StateVector& state, const RingParams& params, double dt);

}  // namespace fluxring

#endif  // FLUXRING_DYNAMICS_H_
