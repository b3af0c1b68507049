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

#include "entcorr/protocols.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace entcorr {

namespace {

void require_mu(double mu) {
  if (!(mu >= 1.0) || !std::isfinite(mu)) {
    throw DomainError(fmt::format("EPR variance mu must be >= 1, got {}", mu));
  }
}

// Travelling modes through the environment, then the environment is traced.
// Layout of `state`: ..., then E1 at `e1`, E2 at `e1 + 1`.
CovarianceMatrix through_environment(const CovarianceMatrix& state, double tau, ModeIndex a,
                                     ModeIndex b, ModeIndex e1) {
  const auto bs = beam_splitter(tau);
  const std::array<ModeIndex, 2> first{a, e1};
  const std::array<ModeIndex, 2> second{b, e1 + 1};
  const std::array<ModeIndex, 2> env{e1, e1 + 1};
  auto mixed = apply_symplectic(state, bs, first);
  mixed = apply_symplectic(mixed, bs, second);
  return partial_trace(mixed, env);
}

// Bell measurement on modes (x, y) of `state`: balanced splitter, whose
// output at x is "+" = (x + y)/sqrt2 and at y is -"-" = (x - y)/sqrt2 up to
// sign; q measured on "-", p on "+". Both measured modes are removed.
CovarianceMatrix bell_measure(const CovarianceMatrix& state, ModeIndex x, ModeIndex y) {
  const std::array<ModeIndex, 2> pair{x, y};
  const auto mixed = apply_symplectic(state, beam_splitter(0.5), pair);
  // Remove the higher index first so the lower index stays valid.
  if (y > x) {
    const auto after_minus = homodyne_condition(mixed, y, Quadrature::Q);
    return homodyne_condition(after_minus, x, Quadrature::P);
  }
  const auto after_plus = homodyne_condition(mixed, x, Quadrature::P);
  return homodyne_condition(after_plus, y, Quadrature::Q);
}

double correlation_product(const EnvironmentParams& env) {
  return (env.omega() - env.g()) * (env.omega() + env.gp());
}

}  // namespace

EprVariances epr_variances(const CovarianceMatrix& cm) {
  if (cm.n_modes() != 2) throw DomainError("epr_variances needs a two-mode covariance matrix");
  const auto& v = cm.data();
  return {0.5 * (v(0, 0) + v(2, 2) - 2.0 * v(0, 2)), 0.5 * (v(1, 1) + v(3, 3) + 2.0 * v(1, 3))};
}

CovarianceMatrix direct_output_cm(double mu, const EnvironmentParams& env) {
  env.require_bona_fide();
  const std::array parts{make_epr_cm(mu), make_env_cm(env.omega(), env.g(), env.gp())};
  return through_environment(CovarianceMatrix::direct_sum(parts), env.tau(), 0, 1, 2);
}

CovarianceMatrix direct_output_cm_closed_form(double mu, const EnvironmentParams& env) {
  env.require_bona_fide();
  const double tau = env.tau();
  return CovarianceMatrix(tau * make_epr_cm(mu).data() +
                          (1.0 - tau) * make_env_cm(env.omega(), env.g(), env.gp()).data());
}

CovarianceMatrix one_mode_output_cm(double mu, const EnvironmentParams& env) {
  env.require_bona_fide();
  const std::array parts{make_epr_cm(mu), make_env_cm(env.omega(), env.g(), env.gp())};
  const auto state = CovarianceMatrix::direct_sum(parts);
  const std::array<ModeIndex, 2> bob_line{1, 3};
  const std::array<ModeIndex, 2> env_modes{2, 3};
  return partial_trace(apply_symplectic(state, beam_splitter(env.tau()), bob_line), env_modes);
}

CovarianceMatrix one_mode_output_cm_closed_form(double mu, const EnvironmentParams& env) {
  env.require_bona_fide();
  require_mu(mu);
  const double tau = env.tau();
  const double cross = std::sqrt(mu * mu - 1.0) * std::sqrt(tau);
  const double x = tau * mu + (1.0 - tau) * env.omega();
  Matrix v = Matrix::Zero(4, 4);
  v(0, 0) = v(1, 1) = mu;
  v(2, 2) = v(3, 3) = x;
  v(0, 2) = v(2, 0) = cross;
  v(1, 3) = v(3, 1) = -cross;
  return CovarianceMatrix(std::move(v));
}

double one_mode_eps_asymptotic(const EnvironmentParams& env) {
  return (1.0 - env.tau()) * env.omega() / (1.0 + env.tau());
}

double direct_eps_asymptotic(const EnvironmentParams& env) {
  env.require_bona_fide();
  return (1.0 - env.tau()) * std::sqrt(correlation_product(env));
}

double direct_eps_at_eb(double tau, double g, double gp) {
  const auto env = EnvironmentParams::at_eb_threshold(tau, g, gp);
  env.require_bona_fide();
  return std::sqrt((1.0 + tau - (1.0 - tau) * g) * (1.0 + tau + (1.0 - tau) * gp));
}

SpectrumPair direct_spectrum_asymptotic(const EnvironmentParams& env, double mu) {
  env.require_bona_fide();
  require_mu(mu);
  const double tau = env.tau();
  const double base = 2.0 * env.omega() + env.gp() - env.g();
  const double spread = std::abs(env.g() + env.gp());
  const double scale = (1.0 - tau) * tau * mu;
  return {std::sqrt((base + spread) * scale), std::sqrt((base - spread) * scale)};
}

double coherent_info_asymptotic(double eps) {
  if (!(eps > 0.0)) throw DomainError(fmt::format("eps must be positive, got {}", eps));
  return -1.0 - std::log(eps);
}

ProtocolResult run_direct(double mu, const EnvironmentParams& env, Route route) {
  auto out = route == Route::Pipeline ? direct_output_cm(mu, env)
                                      : direct_output_cm_closed_form(mu, env);
  const std::array<ModeIndex, 1> bob{kBob};
  auto report = entanglement_report(out, bob);
  const double eps = direct_eps_asymptotic(env);
  return {std::move(out), std::move(report), eps, coherent_info_asymptotic(eps)};
}

CovarianceMatrix swap_noiseless_cm(double mu) {
  require_mu(mu);
  const double diag = (mu * mu + 1.0) / (2.0 * mu);
  const double off = (mu * mu - 1.0) / (2.0 * mu);
  Matrix v = Matrix::Zero(4, 4);
  v.diagonal().setConstant(diag);
  v(0, 2) = v(2, 0) = off;
  v(1, 3) = v(3, 1) = -off;
  return CovarianceMatrix(std::move(v));
}

CovarianceMatrix swap_noiseless_pipeline(double mu) {
  // a = 0, A = 1, b = 2, B = 3
  const std::array parts{make_epr_cm(mu), make_epr_cm(mu)};
  return bell_measure(CovarianceMatrix::direct_sum(parts), 1, 3);
}

CovarianceMatrix swap_conditional_cm(double mu, const EnvironmentParams& env) {
  env.require_bona_fide();
  require_mu(mu);
  const double tau = env.tau();
  const double theta = tau * mu + (1.0 - tau) * (env.omega() - env.g());
  const double theta_p = tau * mu + (1.0 - tau) * (env.omega() + env.gp());
  const double weight = (mu * mu - 1.0) * tau / 2.0;
  const double kq = weight / theta;
  const double kp = weight / theta_p;
  Matrix v = mu * Matrix::Identity(4, 4);
  v(0, 0) -= kq;
  v(2, 2) -= kq;
  v(0, 2) = v(2, 0) = kq;
  v(1, 1) -= kp;
  v(3, 3) -= kp;
  v(1, 3) = v(3, 1) = -kp;
  return CovarianceMatrix(std::move(v));
}

CovarianceMatrix swap_conditional_cm_pipeline(double mu, const EnvironmentParams& env) {
  env.require_bona_fide();
  // a = 0, A = 1, b = 2, B = 3, E1 = 4, E2 = 5
  const std::array parts{make_epr_cm(mu), make_epr_cm(mu),
                         make_env_cm(env.omega(), env.g(), env.gp())};
  const auto at_charlie = through_environment(CovarianceMatrix::direct_sum(parts), env.tau(), 1, 3, 4);
  return bell_measure(at_charlie, 1, 3);
}

double swap_eps_asymptotic(const EnvironmentParams& env) {
  env.require_bona_fide();
  return (1.0 - env.tau()) / env.tau() * std::sqrt(correlation_product(env));
}

EprVariances swap_epr_variances_asymptotic(const EnvironmentParams& env) {
  env.require_bona_fide();
  const double factor = (1.0 - env.tau()) / env.tau();
  return {factor * (env.omega() - env.g()), factor * (env.omega() + env.gp())};
}

EprVariances swap_epr_variances_at_eb(double tau, double g, double gp) {
  const auto env = EnvironmentParams::at_eb_threshold(tau, g, gp);
  env.require_bona_fide();
  return {(1.0 + tau - (1.0 - tau) * g) / tau, (1.0 + tau + (1.0 - tau) * gp) / tau};
}

double swap_coherent_info_determinant_form(const CovarianceMatrix& cm) {
  if (cm.n_modes() != 2) throw DomainError("determinant form needs a two-mode covariance matrix");
  const double det_b = cm.block(kBob, kBob).determinant();
  const double det_ab = cm.data().determinant();
  if (!(det_b > 0.0 && det_ab > 0.0)) throw DomainError("covariance matrix is not positive-definite");
  return std::log(2.0 / std::numbers::e * std::sqrt(det_b / det_ab));
}

ProtocolResult run_swap(double mu, const EnvironmentParams& env, Route route) {
  auto out = route == Route::Pipeline ? swap_conditional_cm_pipeline(mu, env)
                                      : swap_conditional_cm(mu, env);
  const std::array<ModeIndex, 1> bob{kBob};
  auto report = entanglement_report(out, bob);
  const double eps = swap_eps_asymptotic(env);
  return {std::move(out), std::move(report), eps, coherent_info_asymptotic(eps)};
}

}  // namespace entcorr
