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

#include "entcorr/covariance.hpp"
#include "entcorr/environment.hpp"
#include "entcorr/symplectic.hpp"

namespace entcorr {

// Mode labels of the two-mode outputs: Alice (or Charlie's kept mode) is 0,
// Bob is 1. Entanglement reports transpose mode 1 and use it as B in I(A>B).
inline constexpr ModeIndex kAlice = 0;
inline constexpr ModeIndex kBob = 1;

/// How a finite-mu output state is produced.
enum class Route {
  Pipeline,    // explicit symplectic simulation: beam splitters, traces, homodyne
  ClosedForm,  // printed closed-form covariance matrix
};

/// Remote EPR variances V((q_a - q_b)/sqrt2) and V((p_a + p_b)/sqrt2).
struct EprVariances {
  double v_qminus = 0.0;
  double v_pplus = 0.0;

  bool epr_correlated() const { return v_qminus < 1.0 && v_pplus < 1.0; }
};

/// Reads the EPR variances off a two-mode covariance matrix.
EprVariances epr_variances(const CovarianceMatrix& cm);

struct ProtocolResult {
  CovarianceMatrix output_cm;
  EntanglementReport report;
  std::optional<double> asymptotic_eps;
  std::optional<double> asymptotic_coherent_info;
};

// ---- direct distribution -------------------------------------------------

/// EPR(mu) on A, B; each mode mixed with its environmental mode on a
/// beam splitter of transmissivity tau; environment traced out.
CovarianceMatrix direct_output_cm(double mu, const EnvironmentParams& env);

/// tau V(mu) + (1 - tau) V_E, i.e. [[x I, H], [H, x I]] with
/// x = tau mu + (1 - tau) omega, H = tau mu' Z + (1 - tau) G.
CovarianceMatrix direct_output_cm_closed_form(double mu, const EnvironmentParams& env);

/// Only B crosses the environment; A stays with Charlie.
CovarianceMatrix one_mode_output_cm(double mu, const EnvironmentParams& env);

/// [[mu I, mu' sqrt(tau) Z], [mu' sqrt(tau) Z, x I]].
CovarianceMatrix one_mode_output_cm_closed_form(double mu, const EnvironmentParams& env);

/// Large-mu PTS eigenvalue of the one-mode output, (1 - tau) omega / (1 + tau).
double one_mode_eps_asymptotic(const EnvironmentParams& env);

/// Large-mu PTS eigenvalue of the direct output,
/// (1 - tau) sqrt((omega - g)(omega + g')).
double direct_eps_asymptotic(const EnvironmentParams& env);

/// The same quantity with omega at the EB threshold:
/// sqrt([1 + tau - (1 - tau) g][1 + tau + (1 - tau) g']).
double direct_eps_at_eb(double tau, double g, double gp);

struct SpectrumPair {
  double nu_plus = 0.0;
  double nu_minus = 0.0;
};

/// Large-mu symplectic spectrum of the direct output,
/// sqrt((2 omega + g' - g +- |g + g'|)(1 - tau) tau mu).
SpectrumPair direct_spectrum_asymptotic(const EnvironmentParams& env, double mu);

/// ln(1 / (e eps)) = -1 - ln(eps).
double coherent_info_asymptotic(double eps);

ProtocolResult run_direct(double mu, const EnvironmentParams& env, Route route = Route::Pipeline);

// ---- entanglement swapping -----------------------------------------------

/// Conditional remote state after swapping two EPR(mu) states with no loss:
/// (1 / 2mu) [[(mu^2 + 1) I, (mu^2 - 1) Z], [(mu^2 - 1) Z, (mu^2 + 1) I]].
CovarianceMatrix swap_noiseless_cm(double mu);

/// Same state from EPR (x) EPR and an explicit Bell measurement.
CovarianceMatrix swap_noiseless_pipeline(double mu);

/// mu I - ((mu^2 - 1) tau / 2) K(theta, theta') with
/// theta = tau mu + (1 - tau)(omega - g), theta' = tau mu + (1 - tau)(omega + g').
CovarianceMatrix swap_conditional_cm(double mu, const EnvironmentParams& env);

/// Six-mode simulation: EPR(a, A) (x) EPR(b, B) (x) E1 E2, beam splitters on
/// (A, E1) and (B, E2), environment traced, balanced splitter on (A', B'),
/// q-homodyne on the "-" port and p-homodyne on the "+" port.
CovarianceMatrix swap_conditional_cm_pipeline(double mu, const EnvironmentParams& env);

/// ((1 - tau) / tau) sqrt((omega - g)(omega + g')).
double swap_eps_asymptotic(const EnvironmentParams& env);

/// diag of ((1 - tau) / tau)(omega I - Z G).
EprVariances swap_epr_variances_asymptotic(const EnvironmentParams& env);

/// EB-threshold form (1 / tau)[(1 + tau) I - (1 - tau) Z G].
EprVariances swap_epr_variances_at_eb(double tau, double g, double gp);

/// ln((2 / e) sqrt(det V_b / det V_ab)); approaches I(a>b) at large mu.
double swap_coherent_info_determinant_form(const CovarianceMatrix& cm);

ProtocolResult run_swap(double mu, const EnvironmentParams& env, Route route = Route::Pipeline);

}  // namespace entcorr
