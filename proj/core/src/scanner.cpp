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

#include "entcorr/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <fmt/format.h>

#include "entcorr/covariance.hpp"
#include "entcorr/protocols.hpp"

namespace entcorr {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::Direct: return "direct";
    case Protocol::Swap: return "swap";
    case Protocol::EnvironmentOnly: return "env";
  }
  return "unknown";
}

std::optional<Protocol> parse_protocol(std::string_view s) {
  if (s == "direct") return Protocol::Direct;
  if (s == "swap") return Protocol::Swap;
  if (s == "env") return Protocol::EnvironmentOnly;
  return std::nullopt;
}

std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::None: return "None";
    case Activation::Entangling: return "Entangling";
    case Activation::Distillable: return "Distillable";
  }
  return "unknown";
}

double distillability_threshold() { return 1.0 / std::numbers::e; }

ScanSpec ScanSpec::standard(double tau, Protocol protocol, std::size_t resolution,
                            OmegaMode omega_mode) {
  ScanSpec spec;
  spec.tau = tau;
  spec.omega_mode = omega_mode;
  spec.protocol = protocol;
  spec.resolution = resolution;
  const double omega = spec.omega();
  spec.g_range = {-omega, omega};
  spec.gp_range = {-omega, omega};
  return spec;
}

double ScanSpec::omega() const {
  if (const auto* fixed = std::get_if<FixedOmega>(&omega_mode)) return fixed->omega;
  return eb_threshold(tau);
}

void ScanSpec::validate() const {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw DomainError(fmt::format("scan: tau must lie in (0, 1), got {}", tau));
  }
  const double w = omega();
  if (!(w >= 1.0) || !std::isfinite(w)) {
    throw DomainError(fmt::format("scan: omega must be >= 1, got {}", w));
  }
  for (const auto& r : {g_range, gp_range}) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi)) {
      throw DomainError(fmt::format("scan: empty range [{}, {}]", r.lo, r.hi));
    }
  }
  if (resolution < 2) {
    throw DomainError(fmt::format("scan: resolution must be >= 2, got {}", resolution));
  }
}

double ScanSpec::g_at(std::size_t col) const {
  const double step = (g_range.hi - g_range.lo) / static_cast<double>(resolution);
  return g_range.lo + (static_cast<double>(col) + 0.5) * step;
}

double ScanSpec::gp_at(std::size_t row) const {
  const double step = (gp_range.hi - gp_range.lo) / static_cast<double>(resolution);
  return gp_range.lo + (static_cast<double>(row) + 0.5) * step;
}

CellClass classify_point(double tau, double omega, double g, double gp, Protocol protocol) {
  const auto env_class = classify_environment(omega, g, gp);
  if (env_class.env_class == EnvClass::Forbidden) return {};
  if (protocol == Protocol::EnvironmentOnly) {
    return {env_class.env_class, Activation::None, env_class.env_pts};
  }
  const EnvironmentParams env(tau, omega, g, gp);
  const double eps =
      protocol == Protocol::Direct ? direct_eps_asymptotic(env) : swap_eps_asymptotic(env);
  Activation activation = Activation::None;
  if (eps < distillability_threshold()) {
    activation = Activation::Distillable;
  } else if (eps < 1.0) {
    activation = Activation::Entangling;
  }
  return {env_class.env_class, activation, eps};
}

void ScanSummary::add(const CellClass& cell) {
  ++counts[static_cast<std::size_t>(cell.env_class)][static_cast<std::size_t>(cell.activation)];
  ++total;
}

std::size_t ScanSummary::count(EnvClass c, Activation a) const {
  return counts[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)];
}

double ScanSummary::fraction(EnvClass c, Activation a) const {
  return total == 0 ? 0.0 : static_cast<double>(count(c, a)) / static_cast<double>(total);
}

ScanGrid scan(const ScanSpec& spec, std::size_t threads) {
  spec.validate();
  const std::size_t n = spec.resolution;
  const double omega = spec.omega();
  ScanGrid grid{spec, std::vector<CellClass>(n * n), {}};

  auto fill_rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t row = first; row < last; ++row) {
      const double gp = spec.gp_at(row);
      for (std::size_t col = 0; col < n; ++col) {
        grid.cells[row * n + col] = classify_point(spec.tau, omega, spec.g_at(col), gp, spec.protocol);
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  if (workers == 1) {
    fill_rows(0, n);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(fill_rows, w * n / workers, (w + 1) * n / workers);
    }
  }

  for (const auto& cell : grid.cells) grid.summary.add(cell);
  return grid;
}

std::optional<ActivationWitness> separable_activation_exists(double tau, Protocol protocol,
                                                             std::size_t resolution,
                                                             std::size_t threads) {
  if (protocol == Protocol::EnvironmentOnly) {
    throw DomainError("separable_activation_exists needs the direct or swap protocol");
  }
  const auto grid = scan(ScanSpec::standard(tau, protocol, resolution), threads);
  for (std::size_t row = 0; row < resolution; ++row) {
    for (std::size_t col = 0; col < resolution; ++col) {
      const auto& cell = grid.at(row, col);
      if (cell.env_class == EnvClass::Separable && cell.activation != Activation::None) {
        return ActivationWitness{grid.spec.g_at(col), grid.spec.gp_at(row), *cell.eps};
      }
    }
  }
  return std::nullopt;
}

}  // namespace entcorr
