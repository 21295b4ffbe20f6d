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

#include "fluxring/workbench/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace fluxring::workbench {

namespace {

using Json = nlohmann::ordered_json;

// The JSON number carries exactly the digits the text formats show.
Json json_number(double value) {
  if (!std::isfinite(value)) return Json(format_number(value));
  return Json(std::strtod(format_number(value).c_str(), nullptr));
}

Json json_cell(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return Json(*i);
  if (const auto* d = std::get_if<double>(&cell)) return json_number(*d);
  return Json(std::get<std::string>(cell));
}

std::string text_cell(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

std::string header(const Column& column) {
  return column.unit.empty() ? column.name : column.name + " [" + column.unit + "]";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const Report& report) {
  Json root;
  root["schema_version"] = kReportSchemaVersion;
  root["command"] = report.command;
  root["design"] = report.design;
  Json quantities = Json::array();
  for (const auto& q : report.quantities) {
    quantities.push_back(
        {{"key", q.key}, {"label", q.label}, {"value", json_number(q.value)}, {"unit", q.unit}});
  }
  root["quantities"] = quantities;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"key", c.key},
                      {"description", c.description},
                      {"status", std::string(to_string(c.status))},
                      {"value", json_number(c.value)},
                      {"relation", c.relation},
                      {"threshold", json_number(c.threshold)},
                      {"unit", c.unit}});
  }
  root["checks"] = checks;
  Json tables = Json::array();
  for (const auto& t : report.tables) {
    Json columns = Json::array();
    for (const auto& c : t.columns) columns.push_back({{"name", c.name}, {"unit", c.unit}});
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json cells = Json::array();
      for (const auto& cell : row) cells.push_back(json_cell(cell));
      rows.push_back(cells);
    }
    tables.push_back({{"key", t.key}, {"columns", columns}, {"rows", rows}});
  }
  root["tables"] = tables;
  root["notes"] = report.notes;
  return root.dump(2) + "\n";
}

std::string render_table(const Report& report) {
  std::ostringstream out;
  out << report.command << ": " << report.design << "\n";
  if (!report.quantities.empty()) {
    std::size_t width = 0;
    for (const auto& q : report.quantities) width = std::max(width, q.label.size());
    out << "\n";
    for (const auto& q : report.quantities) {
      out << "  " << q.label << std::string(width - q.label.size() + 2, ' ')
          << format_number(q.value) << " " << q.unit << "\n";
    }
  }
  if (!report.checks.empty()) {
    out << "\nchecks:\n";
    for (const auto& c : report.checks) {
      out << "  [" << to_string(c.status) << "] " << c.description << ": "
          << format_number(c.value) << " " << c.relation << " " << format_number(c.threshold)
          << " " << c.unit << "\n";
    }
  }
  for (const auto& t : report.tables) {
    out << "\n" << t.key << ":\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths;
    for (const auto& c : t.columns) widths.push_back(header(c).size());
    for (const auto& row : t.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        line.push_back(text_cell(row[i]));
        widths[i] = std::max(widths[i], line.back().size());
      }
    }
    const auto emit = [&](const std::vector<std::string>& line) {
      out << " ";
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << " " << std::string(widths[i] - line[i].size(), ' ') << line[i];
      }
      out << "\n";
    };
    std::vector<std::string> head;
    for (const auto& c : t.columns) head.push_back(header(c));
    emit(head);
    for (const auto& line : cells) emit(line);
  }
  if (!report.notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& note : report.notes) out << "  - " << note << "\n";
  }
  return out.str();
}

// Blocks separated by blank lines, each led by a "# name" comment line.
std::string render_csv(const Report& report) {
  std::ostringstream out;
  bool first = true;
  const auto block = [&](const std::string& name) {
    if (!first) out << "\n";
    first = false;
    out << "# " << name << "\n";
  };
  if (!report.quantities.empty()) {
    block("quantities");
    out << "key,label,value,unit\n";
    for (const auto& q : report.quantities) {
      out << q.key << "," << csv_field(q.label) << "," << format_number(q.value) << ","
          << q.unit << "\n";
    }
  }
  if (!report.checks.empty()) {
    block("checks");
    out << "key,status,value,relation,threshold,unit\n";
    for (const auto& c : report.checks) {
      out << c.key << "," << to_string(c.status) << "," << format_number(c.value) << ","
          << c.relation << "," << format_number(c.threshold) << "," << c.unit << "\n";
    }
  }
  for (const auto& t : report.tables) {
    block(t.key);
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(header(t.columns[i]));
    }
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_field(text_cell(row[i]));
      }
      out << "\n";
    }
  }
  return out.str();
}

template <typename T>
const T& find_by_key(const std::vector<T>& items, std::string_view key, const char* what) {
  for (const auto& item : items) {
    if (item.key == key) return item;
  }
  throw std::out_of_range(std::string("report has no ") + what + " '" + std::string(key) + "'");
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kMarginal:
      return "marginal";
    case CheckStatus::kFail:
      return "fail";
  }
  return "";
}

const Quantity& Report::quantity(std::string_view key) const {
  return find_by_key(quantities, key, "quantity");
}

const Check& Report::check(std::string_view key) const {
  return find_by_key(checks, key, "check");
}

const Table& Report::table(std::string_view key) const {
  return find_by_key(tables, key, "table");
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return render_json(report);
    case OutputFormat::kCsv:
      return render_csv(report);
    case OutputFormat::kTable:
      break;
  }
  return render_table(report);
}

}  // namespace fluxring::workbench
