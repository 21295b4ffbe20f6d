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

#ifndef FLUXRING_CONSTANTS_H_
#define FLUXRING_CONSTANTS_H_

#include <numbers>

// CODATA 2018 values, SI units.
namespace fluxring::constants {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double kPlanck = 6.62607015e-34;            // J s (exact)
inline constexpr double kHbar = kPlanck / (2.0 * kPi);       // J s
inline constexpr double kElementaryCharge = 1.602176634e-19; // C (exact)
inline constexpr double kElectronMass = 9.1093837015e-31;    // kg
inline constexpr double kMu0 = 1.25663706212e-6;             // H/m
inline constexpr double kEps0 = 8.8541878128e-12;            // F/m
inline constexpr double kSpeedOfLight = 299792458.0;         // m/s (exact)

// Cooper pair: q* = 2e, m* = 2 m_e.
inline constexpr double kCooperCharge = 2.0 * kElementaryCharge;
inline constexpr double kCooperMass = 2.0 * kElectronMass;

// Superconducting flux quantum h / q*.
inline constexpr double kFluxQuantum = kPlanck / kCooperCharge;

}  // namespace fluxring::constants

#endif  // FLUXRING_CONSTANTS_H_
