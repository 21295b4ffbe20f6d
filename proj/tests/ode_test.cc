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

#include "fluxring/ode.h"

#include <cmath>
#include <complex>
#include <vector>

#include "fluxring/errors.h"
#include "gtest/gtest.h"

namespace fluxring {
namespace {

using Complex = std::complex<double>;

ComplexRhs harmonic(double omega) {
  return [omega](double, std::span<const Complex> y, std::span<Complex> dydt) {
    dydt[0] = Complex{0.0, omega} * y[0];
  };
}

TEST(integrate_dormand_prince, rotating_phasor) {
  const double omega = 3.0;
  std::vector<double> times;
  for (int k = 0; k <= 40; ++k) times.push_back(0.25 * k);
  std::vector<Complex> got;
  const auto stats = integrate_dormand_prince(
      harmonic(omega), 0.0, {Complex{1.0, 0.0}}, times, IntegratorOptions{},
      [&](std::size_t, double, std::span<const Complex> y) { got.push_back(y[0]); });
  ASSERT_EQ(got.size(), times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    EXPECT_LT(std::abs(got[k] - std::polar(1.0, omega * times[k])), 1e-8) << times[k];
  }
  EXPECT_GT(stats.accepted_steps, 0);
  // FSAL: one start-up evaluation, one for the initial-step probe, six per attempt.
  EXPECT_EQ(stats.rhs_evaluations, 2 + 6 * (stats.accepted_steps + stats.rejected_steps));
}

TEST(integrate_dormand_prince, dense_output_between_steps) {
  // Samples far denser than the steps exercise the continuous extension.
  IntegratorOptions options;
  options.tol = 1e-9;
  std::vector<double> times;
  for (int k = 0; k <= 2000; ++k) times.push_back(1e-3 * k);
  double worst = 0.0;
  const auto stats = integrate_dormand_prince(
      harmonic(-2.0), 0.0, {Complex{0.0, 1.0}}, times, options,
      [&](std::size_t, double t, std::span<const Complex> y) {
        worst = std::max(worst, std::abs(y[0] - Complex{0.0, 1.0} * std::polar(1.0, -2.0 * t)));
      });
  EXPECT_LT(stats.accepted_steps, 500);
  EXPECT_LT(worst, 1e-7);
}

TEST(integrate_dormand_prince, converges_with_tolerance) {
  const std::vector<double> times = {0.0, 5.0};
  double previous = 1.0;
  for (double tol : {1e-6, 1e-8, 1e-10, 1e-12}) {
    IntegratorOptions options;
    options.tol = tol;
    Complex end;
    integrate_dormand_prince(harmonic(1.0), 0.0, {Complex{1.0, 0.0}}, times, options,
                             [&](std::size_t, double, std::span<const Complex> y) { end = y[0]; });
    const double error = std::abs(end - std::polar(1.0, 5.0));
    EXPECT_LT(error, 1e3 * tol) << tol;
    EXPECT_LT(error, previous);
    previous = error;
  }
}

TEST(integrate_dormand_prince, coupled_two_level_system) {
  // i y' = (g/2) sigma_x y: populations cos^2(g t/2), sin^2(g t/2).
  const double g = 1.7;
  ComplexRhs rhs = [g](double, std::span<const Complex> y, std::span<Complex> dydt) {
    dydt[0] = Complex{0.0, -0.5 * g} * y[1];
    dydt[1] = Complex{0.0, -0.5 * g} * y[0];
  };
  std::vector<double> times;
  for (int k = 0; k <= 30; ++k) times.push_back(0.4 * k);
  integrate_dormand_prince(rhs, 0.0, {Complex{1.0, 0.0}, Complex{0.0, 0.0}}, times,
                           IntegratorOptions{},
                           [&](std::size_t, double t, std::span<const Complex> y) {
                             EXPECT_NEAR(std::norm(y[1]), std::pow(std::sin(0.5 * g * t), 2),
                                         1e-9);
                             EXPECT_NEAR(std::norm(y[0]) + std::norm(y[1]), 1.0, 1e-9);
                           });
}

TEST(integrate_dormand_prince, sample_at_start_is_initial_value) {
  const std::vector<double> times = {1.5, 1.5, 2.0};
  std::vector<Complex> got;
  integrate_dormand_prince(harmonic(1.0), 1.5, {Complex{0.3, -0.4}}, times, IntegratorOptions{},
                           [&](std::size_t, double, std::span<const Complex> y) {
                             got.push_back(y[0]);
                           });
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0], Complex(0.3, -0.4));
  EXPECT_EQ(got[1], Complex(0.3, -0.4));
}

TEST(integrate_dormand_prince, observer_indices_and_times_in_order) {
  const std::vector<double> times = {0.1, 0.2, 0.7, 3.0};
  std::size_t expected = 0;
  integrate_dormand_prince(harmonic(1.0), 0.0, {Complex{1.0, 0.0}}, times, IntegratorOptions{},
                           [&](std::size_t index, double t, std::span<const Complex>) {
                             EXPECT_EQ(index, expected);
                             EXPECT_EQ(t, times[index]);
                             ++expected;
                           });
  EXPECT_EQ(expected, times.size());
}

TEST(integrate_dormand_prince, rejects_bad_sample_times) {
  const auto noop = [](std::size_t, double, std::span<const Complex>) {};
  const std::vector<double> decreasing = {0.0, 2.0, 1.0};
  EXPECT_THROW(integrate_dormand_prince(harmonic(1.0), 0.0, {Complex{1.0}}, decreasing,
                                        IntegratorOptions{}, noop),
               ValidationError);
  const std::vector<double> before_start = {-1.0, 1.0};
  EXPECT_THROW(integrate_dormand_prince(harmonic(1.0), 0.0, {Complex{1.0}}, before_start,
                                        IntegratorOptions{}, noop),
               ValidationError);
  IntegratorOptions bad_tol;
  bad_tol.tol = 0.0;
  const std::vector<double> fine = {1.0};
  EXPECT_THROW(
      integrate_dormand_prince(harmonic(1.0), 0.0, {Complex{1.0}}, fine, bad_tol, noop),
      ValidationError);
}

TEST(integrate_dormand_prince, finite_time_blowup_underflows) {
  // y' = y^2 from y(0) = 1 diverges at t = 1.
  ComplexRhs rhs = [](double, std::span<const Complex> y, std::span<Complex> dydt) {
    dydt[0] = y[0] * y[0];
  };
  const std::vector<double> times = {2.0};
  EXPECT_THROW(integrate_dormand_prince(rhs, 0.0, {Complex{1.0, 0.0}}, times,
                                        IntegratorOptions{},
                                        [](std::size_t, double, std::span<const Complex>) {}),
               StepSizeUnderflow);
}

TEST(integrate_dormand_prince, step_limit) {
  IntegratorOptions options;
  options.max_steps = 10;
  const std::vector<double> times = {1000.0};
  EXPECT_THROW(integrate_dormand_prince(harmonic(1.0), 0.0, {Complex{1.0, 0.0}}, times, options,
                                        [](std::size_t, double, std::span<const Complex>) {}),
               StepLimitExceeded);
}

TEST(integrate_dormand_prince, bit_reproducible) {
  const std::vector<double> times = {0.5, 1.0, 9.0};
  std::vector<Complex> first, second;
  for (auto* out : {&first, &second}) {
    integrate_dormand_prince(harmonic(2.5), 0.0, {Complex{1.0, 0.0}}, times,
                             IntegratorOptions{},
                             [&](std::size_t, double, std::span<const Complex> y) {
                               out->push_back(y[0]);
                             });
  }
  EXPECT_EQ(first, second);
}

}  // namespace
}  // namespace fluxring
