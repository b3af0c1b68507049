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

#include "entcorr/symplectic.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace entcorr {

namespace {

constexpr double kPinvCutoff = 1e-12;
constexpr double kPureTolerance = 1e-12;

// Modes must be distinct and in range.
void validate_modes(std::span<const ModeIndex> modes, std::size_t n_modes, const char* what) {
  std::vector<bool> seen(n_modes, false);
  for (auto m : modes) {
    if (m >= n_modes) {
      throw DomainError(fmt::format("{}: mode index {} out of range for {} modes", what, m, n_modes));
    }
    if (seen[m]) throw DomainError(fmt::format("{}: mode index {} listed twice", what, m));
    seen[m] = true;
  }
}

void validate_proper_subset(std::span<const ModeIndex> modes, std::size_t n_modes,
                            const char* what) {
  validate_modes(modes, n_modes, what);
  if (modes.empty() || modes.size() == n_modes) {
    throw DomainError(fmt::format("{}: need a nonempty proper subset of the {} modes", what, n_modes));
  }
}

std::vector<Eigen::Index> quadrature_indices(std::span<const ModeIndex> modes) {
  std::vector<Eigen::Index> idx;
  idx.reserve(2 * modes.size());
  for (auto m : modes) {
    idx.push_back(static_cast<Eigen::Index>(2 * m));
    idx.push_back(static_cast<Eigen::Index>(2 * m + 1));
  }
  return idx;
}

ModeSet complement(std::span<const ModeIndex> modes, std::size_t n_modes) {
  std::vector<bool> in(n_modes, false);
  for (auto m : modes) in[m] = true;
  ModeSet out;
  for (std::size_t m = 0; m < n_modes; ++m) {
    if (!in[m]) out.push_back(m);
  }
  return out;
}

Matrix submatrix(const Matrix& v, const std::vector<Eigen::Index>& rows,
                 const std::vector<Eigen::Index>& cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v(rows[i], cols[j]);
    }
  }
  return out;
}

Matrix pseudo_inverse(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd inv = svd.singularValues();
  for (Eigen::Index i = 0; i < inv.size(); ++i) {
    inv(i) = inv(i) > kPinvCutoff ? 1.0 / inv(i) : 0.0;
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm) {
  const Matrix& v = cm.data();
  Eigen::LLT<Matrix> llt(v);
  if (llt.info() != Eigen::Success) {
    throw DomainError("covariance matrix is not positive-definite");
  }
  const Matrix l = llt.matrixL();
  const SymplecticForm omega(cm.n_modes());
  const Matrix k = l.transpose() * omega.matrix() * l;

  Eigen::JacobiSVD<Matrix> svd(k);
  const Eigen::VectorXd& sigma = svd.singularValues();  // descending
  std::vector<double> nu(cm.n_modes());
  for (std::size_t j = 0; j < nu.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(2 * j);
    nu[j] = 0.5 * (sigma(i) + sigma(i + 1));
  }
  return nu;
}

std::vector<double> two_mode_symplectic_eigenvalues(const CovarianceMatrix& cm) {
  if (cm.n_modes() != 2) throw DomainError("two-mode formula needs a 4x4 covariance matrix");
  const double delta =
      cm.block(0, 0).determinant() + cm.block(1, 1).determinant() + 2.0 * cm.block(0, 1).determinant();
  const double det = cm.data().determinant();
  if (!(det > 0.0)) throw DomainError("covariance matrix is not positive-definite");
  const double root = std::sqrt(std::max(0.0, delta * delta - 4.0 * det));
  const double plus_sq = 0.5 * (delta + root);
  return {std::sqrt(plus_sq), std::sqrt(det / plus_sq)};
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, std::span<const ModeIndex> modes) {
  validate_modes(modes, cm.n_modes(), "partial_transpose");
  Eigen::VectorXd flip = Eigen::VectorXd::Ones(cm.data().rows());
  for (auto m : modes) flip(static_cast<Eigen::Index>(2 * m + 1)) = -1.0;
  return CovarianceMatrix(flip.asDiagonal() * cm.data() * flip.asDiagonal());
}

double pts_min_eigenvalue(const CovarianceMatrix& cm, std::span<const ModeIndex> partition) {
  validate_proper_subset(partition, cm.n_modes(), "pts_min_eigenvalue");
  return symplectic_eigenvalues(partial_transpose(cm, partition)).back();
}

double two_mode_pts_min(const CovarianceMatrix& cm) {
  if (cm.n_modes() != 2) throw DomainError("two-mode formula needs a 4x4 covariance matrix");
  const double delta_pt =
      cm.block(0, 0).determinant() + cm.block(1, 1).determinant() - 2.0 * cm.block(0, 1).determinant();
  const double det = cm.data().determinant();
  if (!(det > 0.0)) throw DomainError("covariance matrix is not positive-definite");
  const double root = std::sqrt(std::max(0.0, delta_pt * delta_pt - 4.0 * det));
  return std::sqrt(2.0 * det / (delta_pt + root));
}

double log_negativity(double pts_min) {
  if (!(pts_min > 0.0)) throw DomainError("PTS eigenvalue must be positive");
  return std::max(0.0, -std::log(pts_min));
}

double entropy_function(double nu) {
  if (!(nu >= 1.0 - kPhysicalTolerance)) {
    throw DomainError(fmt::format("symplectic eigenvalue {} violates the uncertainty principle", nu));
  }
  if (nu <= 1.0 + kPureTolerance) return 0.0;
  const double up = 0.5 * (nu + 1.0);
  const double down = 0.5 * (nu - 1.0);
  return up * std::log(up) - down * std::log(down);
}

double von_neumann_entropy(const CovarianceMatrix& cm) {
  const double tol = cm.physical_tolerance();
  double s = 0.0;
  for (double nu : symplectic_eigenvalues(cm)) {
    if (nu < 1.0 - tol) {
      throw DomainError(fmt::format("symplectic eigenvalue {} violates the uncertainty principle", nu));
    }
    s += entropy_function(std::max(nu, 1.0));
  }
  return s;
}

double coherent_information(const CovarianceMatrix& cm, std::span<const ModeIndex> keep) {
  validate_proper_subset(keep, cm.n_modes(), "coherent_information");
  return von_neumann_entropy(reduced_state(cm, keep)) - von_neumann_entropy(cm);
}

SymplecticTransform beam_splitter(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw DomainError(fmt::format("beam-splitter transmissivity must lie in (0, 1], got {}", tau));
  }
  const double t = std::sqrt(tau);
  const double r = std::sqrt(1.0 - tau);
  Matrix s = Matrix::Zero(4, 4);
  s.block<2, 2>(0, 0) = t * Eigen::Matrix2d::Identity();
  s.block<2, 2>(0, 2) = r * Eigen::Matrix2d::Identity();
  s.block<2, 2>(2, 0) = -r * Eigen::Matrix2d::Identity();
  s.block<2, 2>(2, 2) = t * Eigen::Matrix2d::Identity();
  return SymplecticTransform(std::move(s));
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& cm, const SymplecticTransform& s,
                                  std::span<const ModeIndex> modes) {
  validate_modes(modes, cm.n_modes(), "apply_symplectic");
  if (modes.size() != s.n_modes()) {
    throw DomainError(fmt::format("apply_symplectic: transform acts on {} modes but {} were listed",
                                  s.n_modes(), modes.size()));
  }
  const auto dim = cm.data().rows();
  Matrix full = Matrix::Identity(dim, dim);
  const auto idx = quadrature_indices(modes);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    full(idx[i], idx[i]) = 0.0;
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      full(idx[i], idx[j]) = s.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return CovarianceMatrix(full * cm.data() * full.transpose());
}

CovarianceMatrix reduced_state(const CovarianceMatrix& cm, std::span<const ModeIndex> keep) {
  validate_modes(keep, cm.n_modes(), "reduced_state");
  if (keep.empty()) throw DomainError("reduced_state: at least one mode must be kept");
  const auto idx = quadrature_indices(keep);
  return CovarianceMatrix(submatrix(cm.data(), idx, idx));
}

CovarianceMatrix partial_trace(const CovarianceMatrix& cm, std::span<const ModeIndex> drop) {
  validate_modes(drop, cm.n_modes(), "partial_trace");
  if (drop.size() == cm.n_modes()) throw DomainError("partial_trace: cannot trace out every mode");
  const auto keep = complement(drop, cm.n_modes());
  return reduced_state(cm, keep);
}

CovarianceMatrix homodyne_condition(const CovarianceMatrix& cm, ModeIndex mode,
                                    Quadrature quadrature) {
  if (mode >= cm.n_modes()) {
    throw DomainError(fmt::format("homodyne_condition: mode {} out of range for {} modes", mode,
                                  cm.n_modes()));
  }
  if (cm.n_modes() < 2) throw DomainError("homodyne_condition: no modes would remain");

  const ModeIndex measured_mode[] = {mode};
  const auto rest = complement(measured_mode, cm.n_modes());
  const auto kept = quadrature_indices(rest);
  const auto measured = quadrature_indices(measured_mode);

  const Matrix a = submatrix(cm.data(), kept, kept);
  const Matrix b = submatrix(cm.data(), measured, measured);
  const Matrix c = submatrix(cm.data(), kept, measured);

  const Eigen::Index q = quadrature == Quadrature::Q ? 0 : 1;
  if (!(b(q, q) > kPinvCutoff)) {
    throw DomainError("homodyne_condition: measured quadrature has zero variance");
  }
  Matrix projector = Matrix::Zero(2, 2);
  projector(q, q) = 1.0;
  const Matrix pinv = pseudo_inverse(projector * b * projector);
  return CovarianceMatrix(a - c * pinv * c.transpose());
}

EntanglementReport entanglement_report(const CovarianceMatrix& cm, std::span<const ModeIndex> bob) {
  EntanglementReport report;
  report.pts_min = pts_min_eigenvalue(cm, bob);
  report.log_negativity = log_negativity(report.pts_min);
  report.coherent_info = coherent_information(cm, bob);
  report.symplectic_spectrum = symplectic_eigenvalues(cm);
  return report;
}

}  // namespace entcorr
