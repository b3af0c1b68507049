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

#include <optional>
#include <string_view>

namespace entcorr {

/// Which of the three bona-fide inequalities failed.
enum class BonaFideCondition {
  CorrelationQ,   // |g| < omega
  CorrelationP,   // |g'| < omega
  Uncertainty,    // omega^2 + g g' - 1 >= omega |g + g'|
};

std::string_view describe(BonaFideCondition c);

struct BonaFideResult {
  std::optional<BonaFideCondition> violated;

  bool physical() const { return !violated.has_value(); }
  explicit operator bool() const { return physical(); }
};

/// Throws DomainError for omega < 1. Conditions are tested in the order
/// listed in BonaFideCondition; the first failure is reported.
BonaFideResult bona_fide_check(double omega, double g, double gp);

/// Smallest PTS eigenvalue of the environment,
/// sqrt(omega^2 - g g' - omega |g - g'|). Requires a bona-fide point.
double env_pts(double omega, double g, double gp);

enum class EnvClass { Forbidden, Separable, Entangled };

std::string_view to_string(EnvClass c);

struct EnvClassification {
  EnvClass env_class = EnvClass::Forbidden;
  std::optional<double> env_pts;  // absent when Forbidden
};

/// Separable iff omega^2 - g g' - 1 >= omega |g - g'| (compared in
/// polynomial form, so boundary points are Separable).
EnvClassification classify_environment(double omega, double g, double gp);

/// One-mode entanglement-breaking threshold (1 + tau) / (1 - tau).
double eb_threshold(double tau);

/// Same threshold expressed as mean thermal photons, tau / (1 - tau).
double eb_threshold_mean_photons(double tau);

/// Correlated two-mode environment seen by both travelling modes.
///
/// Holds tau in (0, 1) and omega >= 1. The correlations (g, g') are not
/// validated here; use bona_fide() or the protocol functions, which throw.
class EnvironmentParams {
 public:
  EnvironmentParams(double tau, double omega, double g, double gp);

  /// omega fixed to eb_threshold(tau).
  static EnvironmentParams at_eb_threshold(double tau, double g, double gp);

  double tau() const { return tau_; }
  double omega() const { return omega_; }
  double g() const { return g_; }
  double gp() const { return gp_; }

  BonaFideResult bona_fide() const { return bona_fide_check(omega_, g_, gp_); }
  /// Throws DomainError when not bona fide.
  void require_bona_fide() const;

 private:
  double tau_;
  double omega_;
  double g_;
  double gp_;
};

}  // namespace entcorr
