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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entcorr {

/// Raised whenever an input lies outside the mathematical domain of an
/// operation: unphysical covariance matrices, out-of-range transmissivities,
/// degenerate measurements, bad mode indices.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

using Matrix = Eigen::MatrixXd;
using ModeIndex = std::size_t;
using ModeSet = std::vector<ModeIndex>;

enum class Quadrature { Q, P };

/// Tolerance below which a symplectic eigenvalue is considered to violate
/// the uncertainty principle.
inline constexpr double kPhysicalTolerance = 1e-9;

/// Real symmetric 2n x 2n matrix of quadrature second moments.
///
/// Ordering is mode-major (q1, p1, q2, p2, ...) and the vacuum has unit
/// variance. Construction checks shape and symmetry (relative 1e-12) and
/// stores the exactly symmetrized matrix; positive-definiteness and
/// physicality are checked by the operations that need them.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix data);

  static CovarianceMatrix identity(std::size_t n_modes);
  /// Direct sum of the blocks, in order.
  static CovarianceMatrix direct_sum(std::span<const CovarianceMatrix> parts);

  std::size_t n_modes() const { return static_cast<std::size_t>(data_.rows()) / 2; }
  const Matrix& data() const { return data_; }
  double operator()(Eigen::Index r, Eigen::Index c) const { return data_(r, c); }

  /// 2x2 block coupling mode i (rows) with mode j (columns).
  Eigen::Matrix2d block(ModeIndex i, ModeIndex j) const;

  /// kPhysicalTolerance widened by the rounding error that the condition
  /// number of the matrix amplifies in its symplectic eigenvalues. Highly
  /// squeezed states (mu ~ 1e4) stored in double precision sit ~1e-8 away
  /// from exact purity.
  double physical_tolerance() const;

  /// True when every symplectic eigenvalue is >= 1 - physical_tolerance().
  bool is_physical() const;

 private:
  Matrix data_;
};

/// Omega = direct sum of n copies of [[0, 1], [-1, 0]].
class SymplecticForm {
 public:
  explicit SymplecticForm(std::size_t n_modes);

  std::size_t n_modes() const { return n_modes_; }
  const Matrix& matrix() const { return omega_; }

 private:
  std::size_t n_modes_;
  Matrix omega_;
};

/// Linear phase-space map S with S Omega S^T = Omega (absolute 1e-10).
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Matrix s);

  std::size_t n_modes() const { return static_cast<std::size_t>(s_.rows()) / 2; }
  const Matrix& matrix() const { return s_; }

 private:
  Matrix s_;
};

/// Two-mode squeezed vacuum [[mu I, mu' Z], [mu' Z, mu I]], mu' = sqrt(mu^2 - 1).
CovarianceMatrix make_epr_cm(double mu);

/// Correlated environment [[omega I, G], [G, omega I]], G = diag(g, gp).
/// Throws DomainError naming the violated bona-fide condition.
CovarianceMatrix make_env_cm(double omega, double g, double gp);

/// Single-mode thermal state nu * I.
CovarianceMatrix make_thermal_cm(double nu);

}  // namespace entcorr
