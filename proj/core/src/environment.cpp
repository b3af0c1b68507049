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

#include "entcorr/environment.hpp"

#include <cmath>

#include <fmt/format.h>

#include "entcorr/covariance.hpp"

namespace entcorr {

namespace {

void require_omega(double omega) {
  if (!(omega >= 1.0) || !std::isfinite(omega)) {
    throw DomainError(fmt::format("thermal variance omega must be >= 1, got {}", omega));
  }
}

void require_open_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw DomainError(fmt::format("transmissivity tau must lie in (0, 1), got {}", tau));
  }
}

}  // namespace

std::string_view describe(BonaFideCondition c) {
  switch (c) {
    case BonaFideCondition::CorrelationQ: return "|g| < omega";
    case BonaFideCondition::CorrelationP: return "|g'| < omega";
    case BonaFideCondition::Uncertainty: return "omega^2 + g g' - 1 >= omega |g + g'|";
  }
  return "unknown";
}

BonaFideResult bona_fide_check(double omega, double g, double gp) {
  require_omega(omega);
  if (!std::isfinite(g) || !std::isfinite(gp)) {
    throw DomainError("correlation parameters must be finite");
  }
  if (!(std::abs(g) < omega)) return {BonaFideCondition::CorrelationQ};
  if (!(std::abs(gp) < omega)) return {BonaFideCondition::CorrelationP};
  if (!(omega * omega + g * gp - 1.0 >= omega * std::abs(g + gp))) {
    return {BonaFideCondition::Uncertainty};
  }
  return {};
}

double env_pts(double omega, double g, double gp) {
  const auto check = bona_fide_check(omega, g, gp);
  if (!check) {
    throw DomainError(fmt::format("environment (omega={}, g={}, g'={}) is not bona fide: {}", omega,
                                  g, gp, describe(*check.violated)));
  }
  return std::sqrt(std::max(0.0, omega * omega - g * gp - omega * std::abs(g - gp)));
}

std::string_view to_string(EnvClass c) {
  switch (c) {
    case EnvClass::Forbidden: return "Forbidden";
    case EnvClass::Separable: return "Separable";
    case EnvClass::Entangled: return "Entangled";
  }
  return "unknown";
}

EnvClassification classify_environment(double omega, double g, double gp) {
  if (!bona_fide_check(omega, g, gp)) return {EnvClass::Forbidden, std::nullopt};
  const bool separable = omega * omega - g * gp - 1.0 >= omega * std::abs(g - gp);
  return {separable ? EnvClass::Separable : EnvClass::Entangled, env_pts(omega, g, gp)};
}

double eb_threshold(double tau) {
  require_open_tau(tau);
  return (1.0 + tau) / (1.0 - tau);
}

double eb_threshold_mean_photons(double tau) {
  require_open_tau(tau);
  return tau / (1.0 - tau);
}

EnvironmentParams::EnvironmentParams(double tau, double omega, double g, double gp)
    : tau_(tau), omega_(omega), g_(g), gp_(gp) {
  require_open_tau(tau);
  require_omega(omega);
  if (!std::isfinite(g) || !std::isfinite(gp)) {
    throw DomainError("correlation parameters must be finite");
  }
}

EnvironmentParams EnvironmentParams::at_eb_threshold(double tau, double g, double gp) {
  return EnvironmentParams(tau, eb_threshold(tau), g, gp);
}

void EnvironmentParams::require_bona_fide() const {
  const auto check = bona_fide();
  if (!check) {
    throw DomainError(fmt::format("environment (omega={}, g={}, g'={}) is not bona fide: {}",
                                  omega_, g_, gp_, describe(*check.violated)));
  }
}

}  // namespace entcorr
