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

#ifndef FLUXRING_ODE_H_
#define FLUXRING_ODE_H_

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace fluxring {

using ComplexVector = std::vector<std::complex<double>>;

// dy/dt = f(t, y), written into dydt.
using ComplexRhs = std::function<void(double t, std::span<const std::complex<double>> y,
                                      std::span<std::complex<double>> dydt)>;

// Called once per requested sample time, in order.
using SampleObserver =
    std::function<void(std::size_t index, double t, std::span<const std::complex<double>> y)>;

struct IntegratorOptions {
  // Per-step local error bound, measured in the max norm against
  // tol * max(1, |y_i|).
  double tol = 1e-10;
  double initial_step = 0.0;  // 0 selects a step automatically
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 100'000'000;
};

struct IntegrationStats {
  long accepted_steps = 0;
  long rejected_steps = 0;
  long rhs_evaluations = 0;
};

// Dormand-Prince 5(4) with local extrapolation, FSAL, and the fourth-order
// continuous extension for dense output at the sample times. Sample times
// must be non-decreasing and >= t0; integration stops at the last one.
//
// Throws StepSizeUnderflow when the controller asks for a step below the
// resolution of t, StepLimitExceeded after max_steps.
IntegrationStats integrate_dormand_prince(const ComplexRhs& rhs, double t0,
                                          const ComplexVector& y0,
                                          std::span<const double> sample_times,
                                          const IntegratorOptions& options,
                                          const SampleObserver& observer);

}  // namespace fluxring

#endif  // FLUXRING_ODE_H_
