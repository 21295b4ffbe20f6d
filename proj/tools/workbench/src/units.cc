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

#include "fluxring/workbench/units.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <utility>

namespace fluxring::workbench {

namespace {

// Power-of-ten units carry a decimal exponent so "60 nm" parses to the same
// double as the literal 60e-9; other units multiply.
struct UnitScale {
  Dimension dimension;
  std::string_view symbol;
  int exponent;
  double factor = 1.0;
};

constexpr std::array kUnits = {
    UnitScale{Dimension::kLength, "m", 0},
    UnitScale{Dimension::kLength, "cm", -2},
    UnitScale{Dimension::kLength, "mm", -3},
    UnitScale{Dimension::kLength, "um", -6},
    UnitScale{Dimension::kLength, "µm", -6},
    UnitScale{Dimension::kLength, "nm", -9},
    UnitScale{Dimension::kLength, "pm", -12},
    UnitScale{Dimension::kDensity, "m^-3", 0},
    UnitScale{Dimension::kDensity, "cm^-3", 6},
    UnitScale{Dimension::kIntensity, "W/m^2", 0},
    UnitScale{Dimension::kIntensity, "W/cm^2", 4},
    UnitScale{Dimension::kIntensity, "mW/cm^2", 1},
    UnitScale{Dimension::kIntensity, "kW/cm^2", 7},
    UnitScale{Dimension::kTime, "s", 0},
    UnitScale{Dimension::kTime, "ms", -3},
    UnitScale{Dimension::kTime, "us", -6},
    UnitScale{Dimension::kTime, "ns", -9},
    UnitScale{Dimension::kTime, "ps", -12},
    UnitScale{Dimension::kTime, "fs", -15},
    UnitScale{Dimension::kAngularFrequency, "rad/s", 0},
    UnitScale{Dimension::kAngle, "rad", 0},
    UnitScale{Dimension::kAngle, "deg", 0, std::numbers::pi / 180.0},
    UnitScale{Dimension::kVectorPotential, "V*s/m", 0},
    UnitScale{Dimension::kVectorPotential, "T*m", 0},
    UnitScale{Dimension::kInductance, "H", 0},
    UnitScale{Dimension::kInductance, "nH", -9},
    UnitScale{Dimension::kInductance, "pH", -12},
    UnitScale{Dimension::kInductance, "fH", -15},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view si_unit(Dimension dimension) {
  switch (dimension) {
    case Dimension::kDimensionless:
      return "1";
    case Dimension::kLength:
      return "m";
    case Dimension::kDensity:
      return "m^-3";
    case Dimension::kIntensity:
      return "W/m^2";
    case Dimension::kTime:
      return "s";
    case Dimension::kAngularFrequency:
      return "rad/s";
    case Dimension::kAngle:
      return "rad";
    case Dimension::kVectorPotential:
      return "V*s/m";
    case Dimension::kInductance:
      return "H";
  }
  return "";
}

std::optional<double> parse_quantity(std::string_view text, Dimension dimension,
                                     std::string* error) {
  text = trim(text);
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [rest, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || !std::isfinite(value)) {
    if (error) *error = "expected a number, got '" + std::string(text) + "'";
    return std::nullopt;
  }
  const std::string_view unit = trim(std::string_view(rest, static_cast<std::size_t>(end - rest)));
  if (unit.empty()) return value;
  for (const auto& entry : kUnits) {
    if (entry.dimension != dimension || entry.symbol != unit) continue;
    if (entry.exponent == 0) return value * entry.factor;
    // Reparse "<mantissa>e<exponent + shift>" for a correctly rounded result.
    const std::string_view number(begin, static_cast<std::size_t>(rest - begin));
    const std::size_t e = number.find_first_of("eE");
    long exponent = entry.exponent;
    if (e != std::string_view::npos) {
      exponent += std::strtol(std::string(number.substr(e + 1)).c_str(), nullptr, 10);
    }
    const std::string shifted =
        std::string(number.substr(0, e)) + "e" + std::to_string(exponent);
    double scaled = 0.0;
    const auto parsed = std::from_chars(shifted.data(), shifted.data() + shifted.size(), scaled);
    if (parsed.ec != std::errc() || !std::isfinite(scaled)) {
      if (error) *error = "value '" + std::string(text) + "' is out of range";
      return std::nullopt;
    }
    return scaled;
  }
  if (error) {
    *error = "unit '" + std::string(unit) + "' is not a " + std::string(si_unit(dimension)) +
             " unit";
  }
  return std::nullopt;
}

}  // namespace fluxring::workbench
