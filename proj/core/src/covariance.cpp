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

#include "entcorr/covariance.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "entcorr/environment.hpp"
#include "entcorr/symplectic.hpp"

namespace entcorr {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kSymplecticTolerance = 1e-10;

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix data) : data_(std::move(data)) {
  if (data_.rows() == 0 || data_.rows() != data_.cols() || data_.rows() % 2 != 0) {
    throw DomainError(fmt::format("covariance matrix must be 2n x 2n with n >= 1, got {} x {}",
                                  data_.rows(), data_.cols()));
  }
  if (!data_.allFinite()) {
    throw DomainError("covariance matrix has non-finite entries");
  }
  const double scale = std::max(1.0, data_.cwiseAbs().maxCoeff());
  const double asym = (data_ - data_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    throw DomainError(fmt::format("covariance matrix is not symmetric (max |V - V^T| = {})", asym));
  }
  data_ = 0.5 * (data_ + data_.transpose());
}

CovarianceMatrix CovarianceMatrix::identity(std::size_t n_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return CovarianceMatrix(Matrix::Identity(dim, dim));
}

CovarianceMatrix CovarianceMatrix::direct_sum(std::span<const CovarianceMatrix> parts) {
  Eigen::Index dim = 0;
  for (const auto& p : parts) dim += p.data().rows();
  Matrix out = Matrix::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (const auto& p : parts) {
    const auto d = p.data().rows();
    out.block(offset, offset, d, d) = p.data();
    offset += d;
  }
  return CovarianceMatrix(std::move(out));
}

Eigen::Matrix2d CovarianceMatrix::block(ModeIndex i, ModeIndex j) const {
  if (i >= n_modes() || j >= n_modes()) {
    throw DomainError(fmt::format("mode index out of range ({}, {}) for {} modes", i, j, n_modes()));
  }
  return data_.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j));
}

double CovarianceMatrix::physical_tolerance() const {
  const Eigen::VectorXd lambda = Eigen::SelfAdjointEigenSolver<Matrix>(data_, Eigen::EigenvaluesOnly).eigenvalues();
  const double lo = lambda.minCoeff();
  const double hi = lambda.cwiseAbs().maxCoeff();
  if (!(lo > 0.0)) return kPhysicalTolerance;
  constexpr double kRoundingFactor = 64.0 * std::numeric_limits<double>::epsilon();
  return kPhysicalTolerance + kRoundingFactor * (hi / lo);
}

bool CovarianceMatrix::is_physical() const {
  try {
    const double tol = physical_tolerance();
    for (double nu : symplectic_eigenvalues(*this)) {
      if (nu < 1.0 - tol) return false;
    }
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

SymplecticForm::SymplecticForm(std::size_t n_modes) : n_modes_(n_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  omega_ = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    omega_(k, k + 1) = 1.0;
    omega_(k + 1, k) = -1.0;
  }
}

SymplecticTransform::SymplecticTransform(Matrix s) : s_(std::move(s)) {
  if (s_.rows() == 0 || s_.rows() != s_.cols() || s_.rows() % 2 != 0) {
    throw DomainError("symplectic transform must be 2n x 2n");
  }
  const SymplecticForm omega(n_modes());
  const double err = (s_ * omega.matrix() * s_.transpose() - omega.matrix()).cwiseAbs().maxCoeff();
  if (!(err <= kSymplecticTolerance)) {
    throw DomainError(fmt::format("matrix is not symplectic (max |S W S^T - W| = {})", err));
  }
}

CovarianceMatrix make_epr_cm(double mu) {
  if (!(mu >= 1.0) || !std::isfinite(mu)) {
    throw DomainError(fmt::format("EPR variance mu must be >= 1, got {}", mu));
  }
  const double mup = std::sqrt(mu * mu - 1.0);
  Matrix v = Matrix::Zero(4, 4);
  v.diagonal().setConstant(mu);
  v(0, 2) = v(2, 0) = mup;
  v(1, 3) = v(3, 1) = -mup;
  return CovarianceMatrix(std::move(v));
}

CovarianceMatrix make_env_cm(double omega, double g, double gp) {
  const auto check = bona_fide_check(omega, g, gp);
  if (!check) {
    throw DomainError(fmt::format("environment (omega={}, g={}, g'={}) is not bona fide: {}", omega,
                                  g, gp, describe(*check.violated)));
  }
  Matrix v = Matrix::Zero(4, 4);
  v.diagonal().setConstant(omega);
  v(0, 2) = v(2, 0) = g;
  v(1, 3) = v(3, 1) = gp;
  return CovarianceMatrix(std::move(v));
}

CovarianceMatrix make_thermal_cm(double nu) {
  if (!(nu >= 1.0) || !std::isfinite(nu)) {
    throw DomainError(fmt::format("thermal variance must be >= 1, got {}", nu));
  }
  return CovarianceMatrix(nu * Matrix::Identity(2, 2));
}

}  // namespace entcorr
