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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "entcorr/environment.hpp"

namespace entcorr {

enum class Protocol { Direct, Swap, EnvironmentOnly };

std::string_view to_string(Protocol p);
std::optional<Protocol> parse_protocol(std::string_view s);

struct AtEbThreshold {};
struct FixedOmega {
  double omega = 1.0;
};
using OmegaMode = std::variant<AtEbThreshold, FixedOmega>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Rasterization of the correlation plane (g, g'). Cells are sampled at
/// their centres; row r runs over g', column c over g.
struct ScanSpec {
  double tau = 0.5;
  OmegaMode omega_mode = AtEbThreshold{};
  Protocol protocol = Protocol::Direct;
  Interval g_range;
  Interval gp_range;
  std::size_t resolution = 201;

  /// Window [-omega, omega]^2, the bounding box of the bona-fide region.
  static ScanSpec standard(double tau, Protocol protocol, std::size_t resolution,
                           OmegaMode omega_mode = AtEbThreshold{});

  double omega() const;
  /// Throws DomainError on an invalid spec.
  void validate() const;

  double g_at(std::size_t col) const;
  double gp_at(std::size_t row) const;
};

enum class Activation { None, Entangling, Distillable };

std::string_view to_string(Activation a);

/// e^-1: below it the coherent information is positive.
double distillability_threshold();

struct CellClass {
  EnvClass env_class = EnvClass::Forbidden;
  Activation activation = Activation::None;
  std::optional<double> eps;
};

/// Classifies one point. For EnvironmentOnly, eps is the environment's PTS
/// eigenvalue and activation is always None.
CellClass classify_point(double tau, double omega, double g, double gp, Protocol protocol);

struct ScanSummary {
  static constexpr std::size_t kClasses = 3;
  static constexpr std::size_t kActivations = 3;

  std::array<std::array<std::size_t, kActivations>, kClasses> counts{};
  std::size_t total = 0;

  void add(const CellClass& cell);
  std::size_t count(EnvClass c, Activation a) const;
  double fraction(EnvClass c, Activation a) const;

  bool operator==(const ScanSummary&) const = default;
};

struct ScanGrid {
  ScanSpec spec;
  std::vector<CellClass> cells;  // row-major, resolution^2 entries
  ScanSummary summary;

  const CellClass& at(std::size_t row, std::size_t col) const {
    return cells[row * spec.resolution + col];
  }
};

/// Evaluates every cell. `threads` > 1 splits rows across workers; the
/// result does not depend on the thread count.
ScanGrid scan(const ScanSpec& spec, std::size_t threads = 1);

struct ActivationWitness {
  double g = 0.0;
  double gp = 0.0;
  double eps = 0.0;
};

/// Searches the bona-fide window at omega = omega_EB for a separable
/// environment with eps < 1. Returns the first witness in row-major order.
std::optional<ActivationWitness> separable_activation_exists(double tau, Protocol protocol,
                                                             std::size_t resolution = 1001,
                                                             std::size_t threads = 1);

}  // namespace entcorr
