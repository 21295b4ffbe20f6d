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

#ifndef FLUXRING_WORKBENCH_UNITS_H_
#define FLUXRING_WORKBENCH_UNITS_H_

#include <optional>
#include <string>
#include <string_view>

namespace fluxring::workbench {

enum class Dimension {
  kDimensionless,
  kLength,
  kDensity,           // per m^3
  kIntensity,         // W/m^2
  kTime,              // s
  kAngularFrequency,  // rad/s
  kAngle,             // rad
  kVectorPotential,   // V s/m = kg m / (s^2 A)
  kInductance,        // H
};

// The SI unit every value of the dimension is converted to.
std::string_view si_unit(Dimension dimension);

// Parses "<number> [unit]" into SI. A bare number is taken as SI already.
// Returns nullopt and fills *error for malformed text or a unit that does not
// belong to the dimension.
std::optional<double> parse_quantity(std::string_view text, Dimension dimension,
                                     std::string* error);

}  // namespace fluxring::workbench

#endif  // FLUXRING_WORKBENCH_UNITS_H_
