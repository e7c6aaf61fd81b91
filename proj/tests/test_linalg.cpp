// Copyright 2026 The parabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parabraid/constants.hpp"
#include "parabraid/linalg.hpp"
#include "parabraid/parafermion.hpp"
#include "parabraid/state.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parabraid;

namespace {

constexpr double kTol = 1e-12;

ComplexMatrix random_hermitian(std::mt19937_64& rng, int n, std::vector<double>* spectrum) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Eigen::VectorXd lambda(n);
  for (int k = 0; k < n; ++k) lambda(k) = u(rng);
  if (spectrum) {
    spectrum->assign(lambda.data(), lambda.data() + n);
    std::sort(spectrum->begin(), spectrum->end(), std::greater<double>());
  }
  const Eigen::MatrixXcd v = oracle::random_unitary(rng, n);
  return v * lambda.cast<std::complex<double>>().asDiagonal() * v.adjoint();
}

}  // namespace

TEST(Linalg, IdentityProduct) {
  EXPECT_LT(frobenius_distance(mat_mul(identity(3), identity(3)), identity(3)), kTol);
}

TEST(Linalg, ShiftCubedIsIdentity) {
  const ComplexMatrix x = shift_x();
  EXPECT_LT(frobenius_distance(mat_mul(mat_mul(x, x), x), identity(3)), kTol);
}

TEST(Linalg, MatMulAgainstTripleLoop) {
  const ComplexMatrix zx = mat_mul(clock_z(), shift_x());
  const auto expected = oracle::matmul(oracle::z3(), oracle::x3());
  EXPECT_LT(frobenius_distance(zx, oracle::to_eigen(expected)), kTol);
  // (Z X)_ij = Z_ii X_ij
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(zx(i, j) - clock_z()(i, i) * shift_x()(i, j)), kTol);
}

TEST(Linalg, MatMulDimensionMismatch) {
  EXPECT_THROW((void)mat_mul(identity(3), identity(9)), DimensionMismatch);
}

TEST(Linalg, KronIdentities) {
  EXPECT_LT(frobenius_distance(kron(identity(3), identity(3)), identity(9)), kTol);
}

TEST(Linalg, KronMatchesIndexFormula) {
  const ComplexMatrix zx = kron(clock_z(), shift_x());
  EXPECT_LT(frobenius_distance(zx, oracle::to_eigen(oracle::kron(oracle::z3(), oracle::x3()))),
            kTol);
  // 1-based (4, 2) is Z(2,1) X(1,2) = 0 because Z is diagonal; (4, 5) is
  // Z(2,2) X(1,2) = omega.
  EXPECT_LT(std::abs(zx(3, 1)), kTol);
  EXPECT_LT(std::abs(zx(3, 4) - kOmega<>), kTol);
}

TEST(Linalg, KronBuildsB12) {
  ComplexMatrix site = ComplexMatrix::Zero(3, 3);
  site.diagonal() << std::polar(1.0, -std::numbers::pi / 3), std::polar(1.0, std::numbers::pi / 3),
      std::polar(1.0, -std::numbers::pi / 3);
  const ComplexMatrix b12 = kron(site, identity(3));
  for (int k = 0; k < 9; ++k) EXPECT_LT(std::abs(b12(k, k) - site(k / 3, k / 3)), kTol);
  EXPECT_LT((b12 - ComplexMatrix(b12.diagonal().asDiagonal())).norm(), kTol);
}

TEST(Linalg, KronProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXcd a = oracle::random_matrix(rng, 3);
    const Eigen::MatrixXcd b = oracle::random_matrix(rng, 3);
    const Eigen::MatrixXcd c = oracle::random_matrix(rng, 3);
    const Eigen::MatrixXcd d = oracle::random_matrix(rng, 3);
    EXPECT_LT(frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    const double scale = (kron(a * c, b * d)).norm();
    EXPECT_LT(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-14 * scale);
  }
}

TEST(Linalg, AdjointInvolution) {
  std::mt19937_64 rng(11);
  const Eigen::MatrixXcd a = oracle::random_matrix(rng, 9);
  EXPECT_EQ(adjoint(adjoint(a)), a);
  EXPECT_LT(frobenius_distance(adjoint(identity(3)), identity(3)), kTol);
  EXPECT_LT(frobenius_distance(adjoint(shift_x()) * shift_x(), identity(3)), kTol);
}

TEST(Linalg, FrobeniusDistance) {
  EXPECT_EQ(frobenius_distance(identity(3), identity(3)), 0.0);
  EXPECT_NEAR(frobenius_distance(identity(3), ComplexMatrix::Zero(3, 3)), std::sqrt(3.0), kTol);
  EXPECT_THROW((void)frobenius_distance(identity(3), identity(2)), DimensionMismatch);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXcd a = oracle::random_matrix(rng, 3);
    const Eigen::MatrixXcd b = oracle::random_matrix(rng, 3);
    const Eigen::MatrixXcd c = oracle::random_matrix(rng, 3);
    EXPECT_DOUBLE_EQ(frobenius_distance(a, b), frobenius_distance(b, a));
    EXPECT_LE(frobenius_distance(a, c), frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-14);
  }
}

TEST(Linalg, EigenvaluesOfDiagonals) {
  ComplexMatrix third = identity(3) / 3.0;
  for (double v : hermitian_eigenvalues(third)) EXPECT_NEAR(v, 1.0 / 3.0, kTol);

  ComplexMatrix pure = ComplexMatrix::Zero(3, 3);
  pure(0, 0) = 1.0;
  const auto ev = hermitian_eigenvalues(pure);
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0], 1.0, kTol);
  EXPECT_NEAR(ev[1], 0.0, kTol);
  EXPECT_NEAR(ev[2], 0.0, kTol);
}

TEST(Linalg, EigenvaluesRecoverPlantedSpectrum) {
  std::mt19937_64 rng(20261014);
  for (int n : {2, 3, 9}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> planted;
      const ComplexMatrix h = random_hermitian(rng, n, &planted);
      const auto ev = hermitian_eigenvalues(h);
      for (int k = 0; k < n; ++k) EXPECT_NEAR(ev[k], planted[k], 1e-10) << "n=" << n;
      double sum = 0;
      for (double v : ev) sum += v;
      EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    }
  }
}

TEST(Linalg, EigenvaluesAgreeWithSelfAdjointSolver) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd g = oracle::random_matrix(rng, 27);
    const Eigen::MatrixXcd h = g + g.adjoint();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const auto ev = hermitian_eigenvalues(h);
    for (int k = 0; k < 27; ++k) EXPECT_NEAR(ev[k], solver.eigenvalues()(26 - k), 1e-10);
  }
}

TEST(Linalg, EigenvaluesLongDouble) {
  using LMat = CMatrix<long double>;
  LMat h = LMat::Zero(2, 2);
  h(0, 1) = std::complex<long double>(0, 1);
  h(1, 0) = std::complex<long double>(0, -1);
  const auto ev = hermitian_eigenvalues(h);
  EXPECT_NEAR(static_cast<double>(ev[0]), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(ev[1]), -1.0, 1e-15);
}

TEST(Linalg, EigenvaluesRejectNonHermitian) {
  EXPECT_THROW((void)hermitian_eigenvalues(shift_x()), NotHermitian);
  EXPECT_THROW((void)hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST(StateVector, IndexConventionSiteOneMostSignificant) {
  const std::vector<int> config{2, 3, 1};
  // (2-1)*9 + (3-1)*3 + 0
  EXPECT_EQ(StateVector::index_of(config), 15u);
  EXPECT_EQ(StateVector::config_of(15, 3), config);
  EXPECT_EQ(StateVector::label_of(15, 3), "231");
  for (std::size_t idx = 0; idx < 81; ++idx) {
    EXPECT_EQ(StateVector::index_of(StateVector::config_of(idx, 4)), idx);
  }
  EXPECT_THROW((void)StateVector::index_of(std::vector<int>{0, 1}), std::out_of_range);
}

TEST(StateVector, RejectsWrongLength) {
  EXPECT_THROW(StateVector(2, ComplexVector::Zero(8)), DimensionMismatch);
  EXPECT_THROW(StateVector(0), std::invalid_argument);
}
