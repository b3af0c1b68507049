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

#include <vector>

#include "entcorr/covariance.hpp"

namespace entcorr {

/// Symplectic spectrum, sorted descending, one value per mode.
///
/// Computed as the singular values of L^T Omega L where V = L L^T. That
/// matrix is antisymmetric and similar to Omega V, so its singular values
/// come in equal pairs (nu_k, nu_k); each pair is averaged. Throws
/// DomainError if V is not positive-definite.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm);

/// Closed two-mode route: nu_pm^2 = (D +- sqrt(D^2 - 4 det V)) / 2 with
/// D = det A + det B + 2 det C. Returned descending. Cross-check path only.
std::vector<double> two_mode_symplectic_eigenvalues(const CovarianceMatrix& cm);

/// Flip p -> -p on the listed modes.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, std::span<const ModeIndex> modes);

/// Smallest symplectic eigenvalue of the partial transpose over `partition`.
/// The partition must be a nonempty proper subset of the modes.
double pts_min_eigenvalue(const CovarianceMatrix& cm, std::span<const ModeIndex> partition);

/// Two-mode closed form with D~ = det A + det B - 2 det C.
double two_mode_pts_min(const CovarianceMatrix& cm);

/// max{0, -ln eps}.
double log_negativity(double pts_min);

/// Thermal entropy function in nats; zero for nu <= 1 + 1e-12, DomainError
/// below 1 - kPhysicalTolerance.
double entropy_function(double nu);

/// Sum of h(nu_k). Eigenvalues within cm.physical_tolerance() below 1 count
/// as pure; lower ones raise DomainError.
double von_neumann_entropy(const CovarianceMatrix& cm);

/// I(A>B) = S(B) - S(AB), where B is the `keep` subsystem.
double coherent_information(const CovarianceMatrix& cm, std::span<const ModeIndex> keep);

/// [[sqrt(tau) I, sqrt(1-tau) I], [-sqrt(1-tau) I, sqrt(tau) I]], tau in (0, 1].
SymplecticTransform beam_splitter(double tau);

/// Embed S on the listed modes (in order) and return S V S^T.
CovarianceMatrix apply_symplectic(const CovarianceMatrix& cm, const SymplecticTransform& s,
                                  std::span<const ModeIndex> modes);

/// Remove the listed modes. At least one mode must remain.
CovarianceMatrix partial_trace(const CovarianceMatrix& cm, std::span<const ModeIndex> drop);

/// Keep only the listed modes, in the given order.
CovarianceMatrix reduced_state(const CovarianceMatrix& cm, std::span<const ModeIndex> keep);

/// Conditional CM of the remaining modes after homodyning one quadrature of
/// `mode`: A - C (Pi B Pi)^+ C^T. The pseudo-inverse drops singular values
/// below 1e-12. Outcome-independent, so no outcome is taken.
CovarianceMatrix homodyne_condition(const CovarianceMatrix& cm, ModeIndex mode,
                                    Quadrature quadrature);

struct EntanglementReport {
  double pts_min = 0.0;
  double log_negativity = 0.0;
  double coherent_info = 0.0;
  std::vector<double> symplectic_spectrum;
};

/// Entanglement across the cut (rest | bob). `bob` is both the transposed
/// side and the subsystem B of the coherent information I(A>B).
EntanglementReport entanglement_report(const CovarianceMatrix& cm, std::span<const ModeIndex> bob);

}  // namespace entcorr
