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

#ifndef FLUXRING_WORKBENCH_REPORT_H_
#define FLUXRING_WORKBENCH_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fluxring::workbench {

// Bumped whenever the JSON layout in docs/report_schema.json changes.
inline constexpr int kReportSchemaVersion = 1;

enum class CheckStatus { kPass, kMarginal, kFail };
std::string_view to_string(CheckStatus status);

struct Quantity {
  std::string key;
  std::string label;
  double value = 0.0;
  std::string unit;  // SI, "1" for pure numbers
};

// A constraint of the form "value <relation> threshold".
struct Check {
  std::string key;
  std::string description;
  CheckStatus status = CheckStatus::kPass;
  double value = 0.0;
  std::string relation;
  double threshold = 0.0;
  std::string unit;
};

using Cell = std::variant<long long, double, std::string>;

struct Column {
  std::string name;
  std::string unit;  // empty for labels and integers
};

struct Table {
  std::string key;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::string design;
  std::vector<Quantity> quantities;
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::vector<std::string> notes;

  // Throws std::out_of_range for unknown keys.
  const Quantity& quantity(std::string_view key) const;
  const Check& check(std::string_view key) const;
  const Table& table(std::string_view key) const;
};

enum class OutputFormat { kTable, kJson, kCsv };
std::optional<OutputFormat> parse_output_format(std::string_view name);

// Six significant digits, the precision of every rendered number.
std::string format_number(double value);

std::string render(const Report& report, OutputFormat format);

}  // namespace fluxring::workbench

#endif  // FLUXRING_WORKBENCH_REPORT_H_
