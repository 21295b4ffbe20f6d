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

#include "fluxring/beam.h"

#include <cmath>
#include <cstdio>

#include "fluxring/constants.h"
#include "fluxring/errors.h"

namespace fluxring {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

template <typename T>
struct PointValue {
  std::complex<T> value;
  T scale;
};

// Sum of weight(term) a exp(-i(k phi + s w t)), with the magnitude bound.
template <typename T, typename Weight>
PointValue<T> sum_terms(const HarmonicDrive& drive, T phi, T t, Weight weight) {
  PointValue<T> out{{0, 0}, 0};
  const T omega = static_cast<T>(drive.omega);
  for (const auto& term : drive.terms) {
    const T phase = -(term.winding * phi + term.time_sign * omega * t);
    const std::complex<T> amplitude(static_cast<T>(term.amplitude.real()),
                                    static_cast<T>(term.amplitude.imag()));
    const std::complex<T> contribution =
        weight(term) * amplitude * std::polar(static_cast<T>(1), phase);
    out.value += contribution;
    out.scale += std::abs(contribution);
  }
  return out;
}

template <typename T>
T check_real(const PointValue<T>& point, T phi, T t) {
  constexpr T kRealTolerance = 1e-14;
  if (std::abs(point.value.imag()) > kRealTolerance * point.scale) {
    char msg[200];
    std::snprintf(msg, sizeof msg,
                  "field has imaginary residue %.3g (scale %.3g) at phi = %.6g, t = %.6g",
                  static_cast<double>(point.value.imag()), static_cast<double>(point.scale),
                  static_cast<double>(phi), static_cast<double>(t));
    throw NonRealField(msg);
  }
  return point.value.real();
}

}  // namespace

Polarization Polarization::LinearX() { return Polarization({1.0, 0.0}, {0.0, 0.0}); }

Polarization Polarization::LinearY() { return Polarization({0.0, 0.0}, {1.0, 0.0}); }

Polarization Polarization::RightCircular() {
  const double s = 1.0 / std::sqrt(2.0);
  return Polarization({s, 0.0}, {0.0, -s});
}

Polarization Polarization::LeftCircular() {
  const double s = 1.0 / std::sqrt(2.0);
  return Polarization({s, 0.0}, {0.0, s});
}

Polarization Polarization::FromJones(std::complex<double> ex, std::complex<double> ey) {
  const double norm = std::norm(ex) + std::norm(ey);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw ValidationError("polarization", "Jones vector must have unit norm");
  }
  return Polarization(ex, ey);
}

void BeamDrive::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw ValidationError("omega", "beam angular frequency must be positive");
  }
  if (!std::isfinite(a0.real()) || !std::isfinite(a0.imag())) {
    throw ValidationError("a0", "amplitude must be finite");
  }
}

std::string to_string(IntensityConvention convention) {
  return convention == IntensityConvention::kPaperConsistent ? "paper-consistent"
                                                             : "peak-field";
}

double amplitude_from_intensity(double intensity, double omega,
                                IntensityConvention convention) {
  if (!(intensity >= 0.0)) throw ValidationError("intensity", "must be non-negative");
  if (!(omega > 0.0)) throw ValidationError("omega", "must be positive");
  const double amplitude = std::sqrt(
      2.0 * intensity / (constants::kSpeedOfLight * constants::kEps0 * omega * omega));
  return convention == IntensityConvention::kPaperConsistent ? amplitude : amplitude / 2.0;
}

HarmonicDrive azimuthal_component(const BeamDrive& beam) {
  beam.validate();
  HarmonicDrive drive;
  drive.omega = beam.omega;

  // -sin(phi) = (i/2)(e^{i phi} - e^{-i phi}),  cos(phi) = (e^{i phi} + e^{-i phi})/2.
  // Against the e^{-i l phi} carrier, e^{+i phi} lowers the winding by one.
  const std::complex<double> ex = beam.polarization.ex();
  const std::complex<double> ey = beam.polarization.ey();
  const std::complex<double> lower = (kI * ex + ey) / 2.0 * beam.a0;
  const std::complex<double> upper = (-kI * ex + ey) / 2.0 * beam.a0;

  const int l = beam.oam_index;
  for (const auto& [winding, amplitude] : {std::pair{l - 1, lower}, std::pair{l + 1, upper}}) {
    if (amplitude == std::complex<double>{0.0, 0.0}) continue;
    drive.terms.push_back({winding, amplitude, +1});
  }
  const std::size_t positive = drive.terms.size();
  for (std::size_t i = 0; i < positive; ++i) {
    const auto& term = drive.terms[i];
    drive.terms.push_back({-term.winding, std::conj(term.amplitude), -1});
  }
  return drive;
}

template <std::floating_point T>
T evaluate_a_phi(const HarmonicDrive& drive, T phi, std::type_identity_t<T> t) {
  return check_real<T>(
      sum_terms<T>(drive, phi, t, [](const HarmonicTerm&) { return std::complex<T>{1}; }), phi,
      t);
}

template <std::floating_point T>
T evaluate_a_phi_derivative(const HarmonicDrive& drive, T phi, std::type_identity_t<T> t) {
  return check_real<T>(sum_terms<T>(drive, phi, t,
                                    [](const HarmonicTerm& term) {
                                      return std::complex<T>{0, -static_cast<T>(term.winding)};
                                    }),
                       phi, t);
}

template double evaluate_a_phi<double>(const HarmonicDrive&, double, double);
template long double evaluate_a_phi<long double>(const HarmonicDrive&, long double,
                                                 long double);
template double evaluate_a_phi_derivative<double>(const HarmonicDrive&, double, double);
template long double evaluate_a_phi_derivative<long double>(const HarmonicDrive&, long double,
                                                            long double);

double harmonic_power(const HarmonicDrive& drive, int time_sign) {
  double power = 0.0;
  for (const auto& term : drive.terms) {
    if (term.time_sign == time_sign) power += std::norm(term.amplitude);
  }
  return power;
}

}  // namespace fluxring
