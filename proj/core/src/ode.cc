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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fluxring/errors.h"

namespace fluxring {

namespace {

namespace dp {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// Difference between the fifth- and fourth-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous extension (Hairer, Norsett & Wanner, dopri5).
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
}  // namespace dp

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;

using Vec = ComplexVector;

double error_scale(double tol, std::complex<double> a, std::complex<double> b) {
  return tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double initial_step(const ComplexRhs& rhs, double t0, const Vec& y0, const Vec& f0,
                    double tol, double span_length, long& evals) {
  const std::size_t n = y0.size();
  double d0 = 0.0, d1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sc = error_scale(tol, y0[i], y0[i]);
    d0 = std::max(d0, std::abs(y0[i]) / sc);
    d1 = std::max(d1, std::abs(f0[i]) / sc);
  }
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span_length : 0.01 * d0 / d1;
  h0 = std::min(h0, span_length);

  Vec y1(n), f1(n);
  for (std::size_t i = 0; i < n; ++i) y1[i] = y0[i] + h0 * f0[i];
  rhs(t0 + h0, y1, f1);
  ++evals;
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d2 = std::max(d2, std::abs(f1[i] - f0[i]) / error_scale(tol, y0[i], y0[i]));
  }
  d2 /= h0;
  const double dmax = std::max(d1, d2);
  const double h1 =
      dmax <= 1e-15 ? std::max(1e-6 * span_length, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
  return std::min({100.0 * h0, h1, span_length});
}

}  // namespace

IntegrationStats integrate_dormand_prince(const ComplexRhs& rhs, double t0,
                                          const ComplexVector& y0,
                                          std::span<const double> sample_times,
                                          const IntegratorOptions& options,
                                          const SampleObserver& observer) {
  IntegrationStats stats;
  if (sample_times.empty()) return stats;
  if (!(options.tol > 0.0)) throw ValidationError("tol", "must be positive");
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    if (sample_times[i] < t0 || (i > 0 && sample_times[i] < sample_times[i - 1])) {
      throw ValidationError("sample_times", "must be non-decreasing and >= t0");
    }
  }

  const std::size_t n = y0.size();
  const double t_end = sample_times.back();
  std::size_t next_sample = 0;

  Vec y = y0;
  while (next_sample < sample_times.size() && sample_times[next_sample] == t0) {
    observer(next_sample, t0, y);
    ++next_sample;
  }
  if (next_sample == sample_times.size()) return stats;

  Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
  Vec r1(n), r2(n), r3(n), r4(n), r5(n), dense(n);

  double t = t0;
  rhs(t, y, k1);
  ++stats.rhs_evaluations;
  double h = options.initial_step > 0.0
                 ? options.initial_step
                 : initial_step(rhs, t, y, k1, options.tol, t_end - t0, stats.rhs_evaluations);
  h = std::min(h, options.max_step);

  long steps = 0;
  while (next_sample < sample_times.size()) {
    if (++steps > options.max_steps) {
      throw StepLimitExceeded("Dormand-Prince exceeded the step limit");
    }
    h = std::min(h, options.max_step);
    const double resolution = 16.0 * std::numeric_limits<double>::epsilon() *
                              std::max(std::abs(t), std::abs(t_end - t0));
    const bool reaches_end = h >= (t_end - t) - resolution;
    if (reaches_end) {
      h = t_end - t;
    } else if (h < resolution) {
      char msg[120];
      std::snprintf(msg, sizeof msg, "step size %.3g underflows at t = %.6g", h, t);
      throw StepSizeUnderflow(msg);
    }

    using namespace dp;
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i) {
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    }
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    }
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i) {
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                            a65 * k5[i]);
    }
    const double t_new = reaches_end ? t_end : t + h;
    rhs(t_new, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i) {
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                            a76 * k6[i]);
    }
    rhs(t_new, ynew, k7);
    stats.rhs_evaluations += 6;

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> e =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      err = std::max(err, std::abs(e) / error_scale(options.tol, y[i], ynew[i]));
    }
    if (!std::isfinite(err)) {
      throw StepSizeUnderflow("non-finite error estimate; the right-hand side diverged");
    }

    const double factor =
        err == 0.0 ? kMaxFactor
                   : std::clamp(kSafety * std::pow(err, -0.2), kMinFactor, kMaxFactor);
    if (err > 1.0) {
      ++stats.rejected_steps;
      h *= std::min(1.0, factor);
      continue;
    }
    ++stats.accepted_steps;

    if (sample_times[next_sample] <= t_new) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> diff = ynew[i] - y[i];
        const std::complex<double> bspl = h * k1[i] - diff;
        r1[i] = y[i];
        r2[i] = diff;
        r3[i] = bspl;
        r4[i] = diff - h * k7[i] - bspl;
        r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                     d7 * k7[i]);
      }
      while (next_sample < sample_times.size() && sample_times[next_sample] <= t_new) {
        const double ts = sample_times[next_sample];
        if (ts == t_new) {
          observer(next_sample, ts, ynew);
        } else {
          const double theta = (ts - t) / h;
          const double theta1 = 1.0 - theta;
          for (std::size_t i = 0; i < n; ++i) {
            dense[i] = r1[i] +
                       theta * (r2[i] + theta1 * (r3[i] + theta * (r4[i] + theta1 * r5[i])));
          }
          observer(next_sample, ts, dense);
        }
        ++next_sample;
      }
    }

    t = t_new;
    y.swap(ynew);
    k1.swap(k7);
    h *= std::min(factor, kMaxFactor);
  }
  return stats;
}

}  // namespace fluxring
