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

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entcorr/scanner.hpp"

namespace entcorr {

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// 9 significant digits, '.' decimal point, independent of the locale.
std::string format_number(double x);

std::optional<EnvClass> parse_env_class(std::string_view s);
std::optional<Activation> parse_activation(std::string_view s);

inline constexpr std::string_view kScanCsvHeader = "g,gp,env_class,activation,eps";

/// Header line, then one row per cell in row-major order. eps is empty
/// for Forbidden cells.
void write_scan_csv(const ScanGrid& grid, std::ostream& out);

struct ScanCsvRow {
  double g = 0.0;
  double gp = 0.0;
  EnvClass env_class = EnvClass::Forbidden;
  Activation activation = Activation::None;
  std::optional<double> eps;
};

struct ParsedScan {
  std::vector<ScanCsvRow> rows;
  ScanSummary summary;
};

/// Throws FormatError on a malformed file.
ParsedScan read_scan_csv(std::istream& in);

/// Mirrors ScanGrid: {"spec": ..., "cells": [...], "summary": ...}. Numbers
/// carry the same 9 significant digits as the CSV.
std::string scan_to_json(const ScanGrid& grid);

}  // namespace entcorr
