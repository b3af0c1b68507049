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

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace entcorr {
namespace {

using testing::Generator;
using testing::MatricesClose;

// h(nu) evaluated independently (mpmath, 30 digits).
constexpr double kEntropyOfTwo = 0.954771252442219227675635733926;
constexpr double kEntropyOfThree = 1.38629436111989061883446424292;  // 2 ln 2

TEST(MakeEprCm, UnitVarianceIsVacuum) {
  EXPECT_TRUE(MatricesClose(make_epr_cm(1.0).data(), Matrix::Identity(4, 4), 0.0));
}

TEST(MakeEprCm, Blocks) {
  const auto v = make_epr_cm(2.0);
  EXPECT_TRUE(MatricesClose(v.block(0, 0), 2.0 * Eigen::Matrix2d::Identity(), 1e-15));
  EXPECT_TRUE(MatricesClose(v.block(1, 1), 2.0 * Eigen::Matrix2d::Identity(), 1e-15));
  const Eigen::Matrix2d z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  EXPECT_TRUE(MatricesClose(v.block(0, 1), std::sqrt(3.0) * z, 1e-15));
  EXPECT_TRUE(MatricesClose(v.block(1, 0), std::sqrt(3.0) * z, 1e-15));
}

TEST(MakeEprCm, IsPure) {
  const auto nu = symplectic_eigenvalues(make_epr_cm(5.0));
  ASSERT_EQ(nu.size(), 2u);
  EXPECT_NEAR(nu[0], 1.0, 1e-12);
  EXPECT_NEAR(nu[1], 1.0, 1e-12);
}

TEST(MakeEprCm, RejectsSubVacuumVariance) {
  EXPECT_THROW(make_epr_cm(0.999), DomainError);
  EXPECT_THROW(make_epr_cm(std::nan("")), DomainError);
}

TEST(MakeEprCm, PurityAcrossSqueezing) {
  for (double mu : {1.0, 1.5, 3.0, 10.0, 100.0, 1e3, 1e4}) {
    const auto v = make_epr_cm(mu);
    EXPECT_NEAR(von_neumann_entropy(v), 0.0, 1e-9) << "mu=" << mu;
    EXPECT_NEAR(v.data().determinant(), 1.0, 1e-6) << "mu=" << mu;
  }
}

TEST(MakeEnvCm, VacuumPair) {
  EXPECT_TRUE(MatricesClose(make_env_cm(1.0, 0.0, 0.0).data(), Matrix::Identity(4, 4), 0.0));
}

TEST(MakeEnvCm, AntiCorrelatedBoundary) {
  const auto v = make_env_cm(2.0, 1.0, -1.0);
  EXPECT_DOUBLE_EQ(v(0, 2), 1.0);
  EXPECT_DOUBLE_EQ(v(1, 3), -1.0);
  const std::array<ModeIndex, 1> second{1};
  EXPECT_NEAR(pts_min_eigenvalue(v, second), 1.0, 1e-12);
}

TEST(MakeEnvCm, RejectsUnphysicalCorrelations) {
  try {
    make_env_cm(2.0, 1.9, 1.9);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("omega |g + g'|"), std::string::npos) << e.what();
  }
}

TEST(CovarianceMatrix, RejectsAsymmetricOrOddShapes) {
  Matrix v = Matrix::Identity(4, 4);
  v(0, 1) = 0.5;
  EXPECT_THROW(CovarianceMatrix{v}, DomainError);
  EXPECT_THROW(CovarianceMatrix{Matrix::Identity(3, 3)}, DomainError);
  EXPECT_THROW(CovarianceMatrix{Matrix::Identity(2, 4)}, DomainError);
}

TEST(SymplecticEigenvalues, Vacuum) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (double nu : symplectic_eigenvalues(CovarianceMatrix::identity(n))) EXPECT_NEAR(nu, 1.0, 1e-14);
  }
}

TEST(SymplecticEigenvalues, EprIsPure) {
  const auto nu = symplectic_eigenvalues(make_epr_cm(3.0));
  EXPECT_NEAR(nu[0], 1.0, 1e-12);
  EXPECT_NEAR(nu[1], 1.0, 1e-12);
}

TEST(SymplecticEigenvalues, ThermalIsAlreadyNormalForm) {
  const auto nu = symplectic_eigenvalues(make_thermal_cm(3.0));
  ASSERT_EQ(nu.size(), 1u);
  EXPECT_NEAR(nu[0], 3.0, 1e-14);
}

TEST(SymplecticEigenvalues, RejectsIndefinite) {
  Matrix v = Matrix::Identity(2, 2);
  v(1, 1) = -1.0;
  EXPECT_THROW(symplectic_eigenvalues(CovarianceMatrix{v}), DomainError);
}

TEST(SymplecticEigenvalues, SortedDescendingAndMatchEigensolver) {
  Generator gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen.index(4);
    const auto v = gen.physical_cm(gen.spectrum(n));
    const auto nu = symplectic_eigenvalues(CovarianceMatrix(v));
    const auto oracle = testing::symplectic_spectrum_by_eigensolver(v);
    ASSERT_EQ(nu.size(), n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k + 1 < n) {
        EXPECT_GE(nu[k], nu[k + 1]);
      }
      EXPECT_NEAR(nu[k], oracle[k], 1e-8 * oracle[k]);
    }
  }
}

TEST(SymplecticEigenvalues, RecoversWilliamsonSpectrum) {
  Generator gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto spectrum = gen.spectrum(1 + gen.index(4));
    const auto v = gen.physical_cm(spectrum);
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    const auto nu = symplectic_eigenvalues(CovarianceMatrix(v));
    for (std::size_t k = 0; k < nu.size(); ++k) EXPECT_NEAR(nu[k], spectrum[k], 1e-9 * spectrum[k]);
  }
}

TEST(SymplecticEigenvalues, InvariantUnderSymplecticMaps) {
  Generator gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen.index(4);
    const CovarianceMatrix v(gen.physical_cm(gen.spectrum(n)));
    const SymplecticTransform s(gen.symplectic(n, 2));
    ModeSet all(n);
    std::iota(all.begin(), all.end(), 0);
    const auto moved = apply_symplectic(v, s, all);
    const auto before = symplectic_eigenvalues(v);
    const auto after = symplectic_eigenvalues(moved);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(after[k], before[k], 1e-9 * before[k]);
  }
}

TEST(SymplecticEigenvalues, TwoModeFormulaAgrees) {
  Generator gen(14);
  for (int trial = 0; trial < 300; ++trial) {
    const CovarianceMatrix v(gen.physical_cm(gen.spectrum(2)));
    const auto generic = symplectic_eigenvalues(v);
    const auto closed = two_mode_symplectic_eigenvalues(v);
    EXPECT_NEAR(generic[0], closed[0], 1e-9 * closed[0]);
    EXPECT_NEAR(generic[1], closed[1], 1e-9 * closed[1]);
  }
}

TEST(PtsMin, ProductOfThermalStates) {
  const std::array<ModeIndex, 1> second{1};
  EXPECT_NEAR(pts_min_eigenvalue(make_env_cm(2.0, 0.0, 0.0), second), 2.0, 1e-13);
}

TEST(PtsMin, EprState) {
  const std::array<ModeIndex, 1> second{1};
  EXPECT_NEAR(pts_min_eigenvalue(make_epr_cm(2.0), second), 2.0 - std::sqrt(3.0), 1e-13);
  EXPECT_NEAR(two_mode_pts_min(make_epr_cm(2.0)), 2.0 - std::sqrt(3.0), 1e-13);
  const std::array<ModeIndex, 1> first{0};
  EXPECT_NEAR(pts_min_eigenvalue(make_epr_cm(2.0), first), 2.0 - std::sqrt(3.0), 1e-13);
}

TEST(PtsMin, CorrelatedEnvironment) {
  const std::array<ModeIndex, 1> second{1};
  EXPECT_NEAR(pts_min_eigenvalue(make_env_cm(3.0, 2.0, -2.0), second), 1.0, 1e-12);
}

TEST(PtsMin, RejectsTrivialPartitions) {
  const auto v = make_epr_cm(2.0);
  const ModeSet none;
  const ModeSet both{0, 1};
  const ModeSet repeated{1, 1};
  const ModeSet outside{2};
  EXPECT_THROW(pts_min_eigenvalue(v, none), DomainError);
  EXPECT_THROW(pts_min_eigenvalue(v, both), DomainError);
  EXPECT_THROW(pts_min_eigenvalue(v, repeated), DomainError);
  EXPECT_THROW(pts_min_eigenvalue(v, outside), DomainError);
}

TEST(PtsMin, TwoModeFormulaMatchesEigenPath) {
  Generator gen(15);
  const std::array<ModeIndex, 1> second{1};
  for (int trial = 0; trial < 500; ++trial) {
    const CovarianceMatrix v(gen.physical_cm(gen.spectrum(2, 3.0)));
    const double generic = pts_min_eigenvalue(v, second);
    const double closed = two_mode_pts_min(v);
    EXPECT_NEAR(generic, closed, 1e-10 * std::max(1.0, closed));
  }
}

TEST(LogNegativity, ZeroExactlyWhenPtsAtLeastOne) {
  EXPECT_EQ(log_negativity(1.0), 0.0);
  EXPECT_EQ(log_negativity(2.5), 0.0);
  EXPECT_GT(log_negativity(std::nextafter(1.0, 0.0)), 0.0);
  EXPECT_NEAR(log_negativity(0.25), std::log(4.0), 1e-15);
  EXPECT_THROW(log_negativity(0.0), DomainError);
}

TEST(Entropy, Values) {
  EXPECT_EQ(von_neumann_entropy(CovarianceMatrix::identity(3)), 0.0);
  EXPECT_NEAR(von_neumann_entropy(make_thermal_cm(3.0)), kEntropyOfThree, 1e-14);
  EXPECT_NEAR(entropy_function(2.0), kEntropyOfTwo, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(make_epr_cm(7.0)), 0.0, 1e-11);
}

TEST(Entropy, BoundaryAndUnphysical) {
  EXPECT_EQ(entropy_function(1.0), 0.0);
  EXPECT_EQ(entropy_function(1.0 + 1e-13), 0.0);
  EXPECT_EQ(entropy_function(1.0 - 1e-10), 0.0);
  EXPECT_THROW(entropy_function(1.0 - 1e-8), DomainError);
  EXPECT_THROW(von_neumann_entropy(CovarianceMatrix(0.5 * Matrix::Identity(2, 2))), DomainError);
}

TEST(Entropy, MonotoneInNu) {
  double previous = entropy_function(1.0);
  for (double nu = 1.0 + 1e-6; nu < 1e4; nu *= 1.1) {
    const double h = entropy_function(nu);
    EXPECT_GT(h, previous) << "nu=" << nu;
    previous = h;
  }
}

TEST(CoherentInformation, EprKeepsThermalMarginal) {
  const std::array<ModeIndex, 1> second{1};
  EXPECT_NEAR(coherent_information(make_epr_cm(2.0), second), kEntropyOfTwo, 1e-11);
}

TEST(CoherentInformation, ProductOfVacua) {
  const std::array<ModeIndex, 1> second{1};
  EXPECT_EQ(coherent_information(CovarianceMatrix::identity(2), second), 0.0);
}

TEST(BeamSplitter, Construction) {
  EXPECT_TRUE(MatricesClose(beam_splitter(1.0).matrix(), Matrix::Identity(4, 4), 0.0));
  const auto half = beam_splitter(0.5).matrix();
  const double r = std::sqrt(0.5);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double expected = (i % 2 != j % 2) ? 0.0 : (i >= 2 && j < 2 ? -r : r);
      EXPECT_NEAR(half(i, j), expected, 1e-16);
    }
  }
  EXPECT_THROW(beam_splitter(0.0), DomainError);
  EXPECT_THROW(beam_splitter(1.01), DomainError);
  EXPECT_THROW(beam_splitter(-0.2), DomainError);
}

TEST(BeamSplitter, MixesThermalNoise) {
  const double tau = 0.3, mu = 5.0, omega = 2.0;
  const std::array parts{make_thermal_cm(mu), make_thermal_cm(omega)};
  const std::array<ModeIndex, 2> pair{0, 1};
  const std::array<ModeIndex, 1> env{1};
  const auto out =
      partial_trace(apply_symplectic(CovarianceMatrix::direct_sum(parts), beam_splitter(tau), pair), env);
  EXPECT_TRUE(MatricesClose(out.data(), (tau * mu + (1 - tau) * omega) * Matrix::Identity(2, 2), 1e-14));
}

TEST(SymplecticTransform, RejectsNonSymplectic) {
  EXPECT_THROW(SymplecticTransform(2.0 * Matrix::Identity(2, 2)), DomainError);
}

TEST(ApplySymplectic, IdentityLeavesStateUnchanged) {
  const auto v = make_epr_cm(3.0);
  const std::array<ModeIndex, 2> pair{1, 0};
  EXPECT_TRUE(MatricesClose(apply_symplectic(v, SymplecticTransform(Matrix::Identity(4, 4)), pair).data(),
                            v.data(), 0.0));
}

TEST(ApplySymplectic, RejectsBadModeLists) {
  const auto v = make_epr_cm(3.0);
  const std::array<ModeIndex, 2> outside{0, 2};
  const std::array<ModeIndex, 2> repeated{0, 0};
  const std::array<ModeIndex, 1> too_few{0};
  EXPECT_THROW(apply_symplectic(v, beam_splitter(0.5), outside), DomainError);
  EXPECT_THROW(apply_symplectic(v, beam_splitter(0.5), repeated), DomainError);
  EXPECT_THROW(apply_symplectic(v, beam_splitter(0.5), too_few), DomainError);
}

TEST(PartialTrace, EprMarginalIsThermal) {
  const std::array<ModeIndex, 1> first{0};
  EXPECT_TRUE(MatricesClose(partial_trace(make_epr_cm(4.0), first).data(), 4.0 * Matrix::Identity(2, 2),
                            0.0));
}

TEST(PartialTrace, PreservesPhysicality) {
  Generator gen(16);
  for (int trial = 0; trial < 50; ++trial) {
    const CovarianceMatrix v(gen.physical_cm(gen.spectrum(4)));
    const std::array<ModeIndex, 2> drop{gen.index(2), 2 + gen.index(2)};
    EXPECT_TRUE(partial_trace(v, drop).is_physical());
  }
}

TEST(PartialTrace, RejectsBadModeLists) {
  const auto v = make_epr_cm(3.0);
  const std::array<ModeIndex, 1> outside{2};
  const std::array<ModeIndex, 2> everything{0, 1};
  EXPECT_THROW(partial_trace(v, outside), DomainError);
  EXPECT_THROW(partial_trace(v, everything), DomainError);
}

TEST(HomodyneCondition, ProductStateUntouched) {
  const std::array parts{make_thermal_cm(3.0), make_epr_cm(2.0)};
  const auto v = CovarianceMatrix::direct_sum(parts);
  const auto out = homodyne_condition(v, 0, Quadrature::P);
  EXPECT_TRUE(MatricesClose(out.data(), make_epr_cm(2.0).data(), 1e-15));
}

TEST(HomodyneCondition, EprSchurComplement) {
  const auto out = homodyne_condition(make_epr_cm(2.0), 1, Quadrature::Q);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 0.5;
  expected(1, 1) = 2.0;
  EXPECT_TRUE(MatricesClose(out.data(), expected, 1e-14));
}

TEST(HomodyneCondition, MatchesRankOneUpdate) {
  Generator gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix v = gen.physical_cm(gen.spectrum(3));
    const ModeIndex mode = gen.index(3);
    const auto quad = trial % 2 == 0 ? Quadrature::Q : Quadrature::P;
    const auto measured = static_cast<Eigen::Index>(2 * mode + (quad == Quadrature::Q ? 0 : 1));
    // Conditioning on a scalar: V - v_m v_m^T / V_mm, measured mode removed.
    const Matrix full = v - v.col(measured) * v.row(measured) / v(measured, measured);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      if (i / 2 != static_cast<Eigen::Index>(mode)) keep.push_back(i);
    }
    Matrix expected(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) expected(i, j) = full(keep[i], keep[j]);
    }
    EXPECT_TRUE(MatricesClose(homodyne_condition(CovarianceMatrix(v), mode, quad).data(), expected, 1e-11));
  }
}

TEST(HomodyneCondition, DisjointMeasurementsCommute) {
  Generator gen(18);
  for (int trial = 0; trial < 100; ++trial) {
    const CovarianceMatrix v(gen.physical_cm(gen.spectrum(4)));
    // q on mode 3 then p on mode 1, versus p on mode 1 then q on (former) mode 3.
    const auto a = homodyne_condition(homodyne_condition(v, 3, Quadrature::Q), 1, Quadrature::P);
    const auto b = homodyne_condition(homodyne_condition(v, 1, Quadrature::P), 2, Quadrature::Q);
    EXPECT_TRUE(MatricesClose(a.data(), b.data(), 1e-10));
    EXPECT_TRUE(a.is_physical());
  }
}

TEST(HomodyneCondition, Errors) {
  Matrix v = Matrix::Identity(4, 4);
  v(0, 0) = 0.0;
  EXPECT_THROW(homodyne_condition(CovarianceMatrix(v), 0, Quadrature::Q), DomainError);
  EXPECT_NO_THROW(homodyne_condition(CovarianceMatrix(v), 0, Quadrature::P));
  EXPECT_THROW(homodyne_condition(make_epr_cm(2.0), 2, Quadrature::Q), DomainError);
  EXPECT_THROW(homodyne_condition(make_thermal_cm(2.0), 0, Quadrature::Q), DomainError);
}

TEST(EntanglementReport, FieldsAreConsistent) {
  const std::array<ModeIndex, 1> bob{1};
  const auto report = entanglement_report(make_epr_cm(2.0), bob);
  EXPECT_NEAR(report.pts_min, 2.0 - std::sqrt(3.0), 1e-13);
  EXPECT_DOUBLE_EQ(report.log_negativity, -std::log(report.pts_min));
  EXPECT_NEAR(report.coherent_info, kEntropyOfTwo, 1e-11);
  ASSERT_EQ(report.symplectic_spectrum.size(), 2u);

  const auto separable = entanglement_report(make_env_cm(2.0, 0.0, 0.0), bob);
  EXPECT_EQ(separable.log_negativity, 0.0);
}

}  // namespace
}  // namespace entcorr
