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

#include "fluxring/coupling.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "fluxring/constants.h"
#include "fluxring/errors.h"

namespace fluxring {

namespace {

using constants::kCooperCharge;
using constants::kCooperMass;
using constants::kHbar;
using constants::kPi;

void check_basis(int m, int n, int n_max) {
  if (std::abs(m) > n_max || std::abs(n) > n_max) {
    char msg[120];
    std::snprintf(msg, sizeof msg, "level pair (%d, %d) outside basis |n| <= %d", m, n,
                  n_max);
    throw TruncationExceeded(msg);
  }
}

double inductance_ratio(const RingParams& params) {
  return params.kinetic_inductance / params.total_inductance;
}

// Prefactor of the A-linear part after the phi integral over Psi_m^* Psi_n.
double linear_prefactor(const RingParams& params) {
  return kHbar * kCooperCharge * params.pair_count /
         (2.0 * kCooperMass * params.design.radius) * inductance_ratio(params);
}

double quadratic_prefactor(const RingParams& params) {
  return kCooperCharge * kCooperCharge * params.pair_count / (2.0 * kCooperMass);
}

}  // namespace

std::vector<MatrixElementTerm> matrix_element_terms(int m, int n,
                                                    const HarmonicDrive& drive,
                                                    const RingParams& params, int n_max) {
  check_basis(m, n, n_max);
  const int delta = m - n;

  // Keyed by (order, photons) so that the output order is deterministic.
  std::map<std::pair<int, int>, std::complex<double>> merged;

  // (d_phi A + A d_phi) acting on e^{-i n phi} against a harmonic e^{-i k phi}
  // gives -i (k + 2n); the phi integral enforces k = m - n.
  const double linear = linear_prefactor(params);
  for (const auto& term : drive.terms) {
    if (term.winding != delta) continue;
    merged[{1, term.time_sign}] +=
        linear * static_cast<double>(term.winding + 2 * n) * term.amplitude;
  }

  const double quadratic = quadratic_prefactor(params);
  for (const auto& first : drive.terms) {
    for (const auto& second : drive.terms) {
      if (first.winding + second.winding != delta) continue;
      merged[{2, first.time_sign + second.time_sign}] +=
          quadratic * first.amplitude * second.amplitude;
    }
  }

  // Beats are formed in extended precision from the same level and drive
  // frequencies the basis phases use; the double rounding error is kept.
  const long double natural = static_cast<long double>(level_angular_frequency(m, params)) -
                              static_cast<long double>(level_angular_frequency(n, params));
  std::vector<MatrixElementTerm> terms;
  for (const auto& [key, amplitude] : merged) {
    if (amplitude == std::complex<double>{0.0, 0.0}) continue;
    const auto [order, photons] = key;
    const long double beat = natural - photons * static_cast<long double>(drive.omega);
    const double rounded = static_cast<double>(beat);
    terms.push_back(
        {amplitude, rounded, order, photons, static_cast<double>(beat - rounded)});
  }
  return terms;
}

std::complex<double> evaluate_terms(std::span<const MatrixElementTerm> terms, double t) {
  // |beat t| reaches 1e3 rad over picoseconds; a double phase would lose
  // ~1e-13 of it, visible when terms nearly cancel.
  using Real = long double;
  std::complex<Real> sum{0, 0};
  for (const auto& term : terms) {
    const Real phase = (static_cast<Real>(term.beat) + term.beat_residual) * t;
    sum += std::complex<Real>(term.amplitude.real(), term.amplitude.imag()) *
           std::polar(Real{1}, phase);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> matrix_element_quadrature(int m, int n, const HarmonicDrive& drive,
                                               const RingParams& params, double t,
                                               int n_max, int points) {
  check_basis(m, n, n_max);
  if (points < 16) throw ValidationError("points", "quadrature needs at least 16 nodes");

  // Extended precision: for elements reached only through A^2 the A-linear
  // integrand cancels across nodes at ~1e4 times the element's size.
  using Real = long double;
  using Complex = std::complex<Real>;
  const Complex linear{0, static_cast<Real>(kHbar) * static_cast<Real>(kCooperCharge) /
                              (2 * static_cast<Real>(kCooperMass) *
                               static_cast<Real>(params.design.radius)) *
                              static_cast<Real>(inductance_ratio(params))};
  const Real quadratic = static_cast<Real>(kCooperCharge) * static_cast<Real>(kCooperCharge) /
                         (2 * static_cast<Real>(kCooperMass));

  // On the uniform grid phi_p = 2 pi p / P every azimuthal factor e^{-i k phi_p}
  // is the root of unity with index k p mod P, so one table serves all nodes;
  // time phases are constant per call and factored out.
  std::vector<Complex> roots(points);
  for (int q = 0; q < points; ++q) {
    roots[q] = std::polar(Real{1}, -2 * std::numbers::pi_v<Real> * q / points);
  }
  const auto root = [&](long long k, int p) {
    const long long index = (k * p) % points;
    return roots[index < 0 ? index + points : index];
  };
  const Real time = t;
  std::vector<Complex> coefficients;
  for (const auto& term : drive.terms) {
    const Complex amplitude(term.amplitude.real(), term.amplitude.imag());
    coefficients.push_back(
        amplitude * std::polar(Real{1}, -term.time_sign * static_cast<Real>(drive.omega) * time));
  }
  const Real norm = static_cast<Real>(params.pair_count) / (2 * std::numbers::pi_v<Real>);
  const Complex levels =
      norm * std::polar(Real{1}, (static_cast<Real>(level_angular_frequency(m, params)) -
                                  static_cast<Real>(level_angular_frequency(n, params))) *
                                     time);

  Complex sum{0, 0};
  for (int p = 0; p < points; ++p) {
    Complex a{0, 0}, da{0, 0};
    Real scale = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      const Complex c = coefficients[j] * root(drive.terms[j].winding, p);
      a += c;
      da += Complex{0, -static_cast<Real>(drive.terms[j].winding)} * c;
      scale += std::abs(c);
    }
    if (std::abs(a.imag()) > 1e-14L * scale) {
      throw NonRealField("drive field is not real on the ring");
    }
    // conj(psi_m) H psi_n with d_phi(A psi) + A d_phi psi = A' psi + 2 A psi'.
    const Real field = a.real();
    const Complex h = linear * (da.real() - Complex{0, 2 * static_cast<Real>(n)} * field) +
                      quadratic * field * field;
    sum += root(n - m, p) * h;
  }
  sum *= levels;
  sum *= 2 * std::numbers::pi_v<Real> / points;
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::set<SelectionRule> selection_rules(const HarmonicDrive& drive) {
  std::set<SelectionRule> rules;
  for (const auto& term : drive.terms) {
    if (term.winding != 0) rules.insert({term.winding, 1});
  }
  for (const auto& first : drive.terms) {
    for (const auto& second : drive.terms) {
      const int sum = first.winding + second.winding;
      if (sum != 0) rules.insert({sum, 2});
    }
  }
  return rules;
}

std::vector<TransitionCatalogEntry> resonance_catalog(const HarmonicDrive& drive,
                                                      const RingParams& params,
                                                      int n_init, int n_max) {
  check_basis(n_init, n_init, n_max);
  std::vector<TransitionCatalogEntry> catalog;
  for (int m = -n_max; m <= n_max; ++m) {
    if (m == n_init) continue;
    const double natural = transition_angular_frequency(m, n_init, params);
    for (const auto& term : matrix_element_terms(m, n_init, drive, params, n_max)) {
      if (term.photons == 0) continue;
      const double omega = natural / term.photons;
      if (!(omega > 0.0)) continue;
      TransitionCatalogEntry entry;
      entry.initial = n_init;
      entry.final = m;
      entry.required_omega = omega;
      entry.order = term.order;
      entry.photons = term.photons;
      entry.coupling = std::abs(term.amplitude);
      entry.source = term.order == 1 ? "A-linear, one-photon" : "A-squared, two-photon";
      catalog.push_back(std::move(entry));
    }
  }
  std::sort(catalog.begin(), catalog.end(),
            [](const TransitionCatalogEntry& a, const TransitionCatalogEntry& b) {
              const auto key = [](const TransitionCatalogEntry& e) {
                return std::tuple(e.order, std::abs(e.final - e.initial), e.final);
              };
              return key(a) < key(b);
            });
  return catalog;
}

double rabi_frequency(const RingParams& params, double a0_magnitude) {
  if (!(a0_magnitude >= 0.0)) throw ValidationError("a0", "must be non-negative");
  return params.pair_count * kCooperCharge / (params.design.radius * kCooperMass) *
         inductance_ratio(params) * a0_magnitude;
}

}  // namespace fluxring
