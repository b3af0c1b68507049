// Copyright 2026 The entcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entcorr/scan_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace entcorr {

namespace {

constexpr std::array kEnvClasses{EnvClass::Forbidden, EnvClass::Separable, EnvClass::Entangled};
constexpr std::array kActivations{Activation::None, Activation::Entangling, Activation::Distillable};

// Value as it appears in the text formats.
double rounded(double x) {
  const auto s = format_number(x);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

double parse_double(std::string_view field, std::size_t line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw FormatError(fmt::format("line {}: bad number '{}'", line, field));
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_number(double x) { return fmt::format("{:.9g}", x); }

std::optional<EnvClass> parse_env_class(std::string_view s) {
  for (auto c : kEnvClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<Activation> parse_activation(std::string_view s) {
  for (auto a : kActivations) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

void write_scan_csv(const ScanGrid& grid, std::ostream& out) {
  const auto& spec = grid.spec;
  std::string buffer;
  buffer.reserve(64 * grid.cells.size());
  buffer.append(kScanCsvHeader).push_back('\n');
  for (std::size_t row = 0; row < spec.resolution; ++row) {
    const auto gp = format_number(spec.gp_at(row));
    for (std::size_t col = 0; col < spec.resolution; ++col) {
      const auto& cell = grid.at(row, col);
      fmt::format_to(std::back_inserter(buffer), "{},{},{},{},{}\n", format_number(spec.g_at(col)), gp,
                     to_string(cell.env_class), to_string(cell.activation),
                     cell.eps ? format_number(*cell.eps) : std::string{});
    }
  }
  out << buffer;
}

ParsedScan read_scan_csv(std::istream& in) {
  ParsedScan parsed;
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kScanCsvHeader) {
    throw FormatError("missing or unexpected CSV header");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 5) {
      throw FormatError(fmt::format("line {}: expected 5 fields, got {}", line_no, fields.size()));
    }
    ScanCsvRow row;
    row.g = parse_double(fields[0], line_no);
    row.gp = parse_double(fields[1], line_no);
    const auto env_class = parse_env_class(fields[2]);
    const auto activation = parse_activation(fields[3]);
    if (!env_class || !activation) {
      throw FormatError(fmt::format("line {}: unknown class '{}' / '{}'", line_no, fields[2], fields[3]));
    }
    row.env_class = *env_class;
    row.activation = *activation;
    if (!fields[4].empty()) row.eps = parse_double(fields[4], line_no);
    parsed.summary.add({row.env_class, row.activation, row.eps});
    parsed.rows.push_back(row);
  }
  return parsed;
}

std::string scan_to_json(const ScanGrid& grid) {
  using nlohmann::ordered_json;
  const auto& spec = grid.spec;

  ordered_json j_spec;
  j_spec["tau"] = rounded(spec.tau);
  j_spec["omega"] = rounded(spec.omega());
  j_spec["omega_mode"] = std::holds_alternative<AtEbThreshold>(spec.omega_mode) ? "at_eb" : "fixed";
  j_spec["protocol"] = to_string(spec.protocol);
  j_spec["g_range"] = {rounded(spec.g_range.lo), rounded(spec.g_range.hi)};
  j_spec["gp_range"] = {rounded(spec.gp_range.lo), rounded(spec.gp_range.hi)};
  j_spec["resolution"] = spec.resolution;

  ordered_json cells = ordered_json::array();
  for (std::size_t row = 0; row < spec.resolution; ++row) {
    for (std::size_t col = 0; col < spec.resolution; ++col) {
      const auto& cell = grid.at(row, col);
      ordered_json c;
      c["g"] = rounded(spec.g_at(col));
      c["gp"] = rounded(spec.gp_at(row));
      c["env_class"] = to_string(cell.env_class);
      c["activation"] = to_string(cell.activation);
      c["eps"] = cell.eps ? ordered_json(rounded(*cell.eps)) : ordered_json(nullptr);
      cells.push_back(std::move(c));
    }
  }

  ordered_json counts;
  ordered_json fractions;
  for (auto c : kEnvClasses) {
    for (auto a : kActivations) {
      counts[std::string(to_string(c))][std::string(to_string(a))] = grid.summary.count(c, a);
      fractions[std::string(to_string(c))][std::string(to_string(a))] =
          rounded(grid.summary.fraction(c, a));
    }
  }
  ordered_json summary;
  summary["total"] = grid.summary.total;
  summary["counts"] = std::move(counts);
  summary["fractions"] = std::move(fractions);

  ordered_json doc;
  doc["spec"] = std::move(j_spec);
  doc["cells"] = std::move(cells);
  doc["summary"] = std::move(summary);
  return doc.dump(1) + "\n";
}

}  // namespace entcorr
