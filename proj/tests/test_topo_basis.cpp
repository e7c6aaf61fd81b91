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

#include "parabraid/braid_tl.hpp"
#include "parabraid/constants.hpp"
#include "parabraid/entanglement.hpp"
#include "parabraid/topo_basis.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace parabraid;

namespace {

constexpr double kTol = 1e-12;

constexpr std::array<PairKind, 3> kKinds{PairKind::alpha, PairKind::beta, PairKind::gamma};

std::complex<double> w(int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0); }

// Direct transcription of the pair tables: amplitude of |a b> in each pair.
std::complex<double> pair_amp(PairKind kind, int a, int b) {
  const double s = 1.0 / std::sqrt(3.0);
  switch (kind) {
    case PairKind::alpha:
      if (a == 1 && b == 1) return s;
      if (a == 2 && b == 3) return s * w(2);
      if (a == 3 && b == 2) return s * w(1);
      return 0.0;
    case PairKind::beta:
      if ((a == 1 && b == 2) || (a == 2 && b == 1) || (a == 3 && b == 3)) return s;
      return 0.0;
    case PairKind::gamma:
      if (a == 1 && b == 3) return s;
      if (a == 2 && b == 2) return s * w(1);
      if (a == 3 && b == 1) return s * w(2);
      return 0.0;
  }
  return 0.0;
}

// e1, e2 amplitude by explicit summation over the three pairings.
std::complex<double> e1_amp(const std::array<int, 4>& n) {
  using enum PairKind;
  return (pair_amp(alpha, n[0], n[1]) * pair_amp(gamma, n[2], n[3]) +
          pair_amp(beta, n[0], n[1]) * pair_amp(beta, n[2], n[3]) +
          pair_amp(gamma, n[0], n[1]) * pair_amp(alpha, n[2], n[3])) /
         std::sqrt(3.0);
}

std::complex<double> e2_amp(const std::array<int, 4>& n) {
  using enum PairKind;
  const std::complex<double> crossed =
      w(1) * pair_amp(alpha, n[1], n[2]) * pair_amp(gamma, n[3], n[0]) +
      pair_amp(beta, n[1], n[2]) * pair_amp(beta, n[3], n[0]) +
      w(1) * pair_amp(gamma, n[1], n[2]) * pair_amp(alpha, n[3], n[0]);
  return (std::complex<double>(0, 1) * crossed - e1_amp(n)) / std::sqrt(2.0);
}

}  // namespace

TEST(Pairs, CoefficientsAreUnitaryOverSqrt3) {
  for (PairKind k : kKinds) {
    const ComplexMatrix c = pair_coefficients(k);
    EXPECT_LT(unitarity_residual(std::sqrt(3.0) * c), kTol) << pair_name(k);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) EXPECT_LT(std::abs(c(a - 1, b - 1) - pair_amp(k, a, b)), kTol);
  }
  EXPECT_EQ(pair_name(PairKind::beta), "beta");
}

TEST(Pairs, OrthonormalAndMaximallyEntangled) {
  for (PairKind a : kKinds) {
    const StateVector va = pair_state(a, 1, 2, 2);
    EXPECT_TRUE(va.is_normalized(kTol));
    const std::vector<double> spectrum = hermitian_eigenvalues(partial_trace(va, 1));
    for (double p : spectrum) EXPECT_NEAR(p, 1.0 / 3.0, kTol);
    for (PairKind b : kKinds) {
      if (a == b) continue;
      EXPECT_LT(std::abs(va.inner(pair_state(b, 1, 2, 2))), kTol);
    }
  }
}

TEST(Pairs, EachPairHasDefiniteParity) {
  // beta lives in the parity-one sector; alpha in omega^2; gamma in omega.
  auto sector_of = [](PairKind k) {
    const ComplexMatrix c = pair_coefficients(k);
    std::complex<double> value;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (std::abs(c(a, b)) > 0) value = omega_power(a + b + 2);
    return value;
  };
  EXPECT_LT(std::abs(sector_of(PairKind::alpha) - kOmega2<>), kTol);
  EXPECT_LT(std::abs(sector_of(PairKind::beta) - 1.0), kTol);
  EXPECT_LT(std::abs(sector_of(PairKind::gamma) - kOmega<>), kTol);
}

TEST(Pairs, BetaIsSwapSymmetric) {
  const StateVector b12 = pair_state(PairKind::beta, 1, 2, 2);
  const StateVector b21 = pair_state(PairKind::beta, 2, 1, 2);
  EXPECT_LT((b12.amplitudes() - b21.amplitudes()).norm(), kTol);
  const StateVector a21 = pair_state(PairKind::alpha, 2, 1, 2);
  const StateVector a12 = pair_state(PairKind::alpha, 1, 2, 2);
  // Swapping alpha stays in its parity sector but is orthogonal to it:
  // the overlap is (1 + w + w^2) / 3.
  EXPECT_LT(std::abs(a21.inner(a12)), kTol);
  EXPECT_TRUE(a21.is_normalized(kTol));
}

TEST(Pairs, EmbeddedPairFillsRestWithLevelOne) {
  const StateVector v = pair_state(PairKind::gamma, 2, 4, 4);
  EXPECT_LT(std::abs(v.at(std::array{1, 2, 1, 2}) - pair_amp(PairKind::gamma, 2, 2)), kTol);
  EXPECT_EQ(v.at(std::array{2, 2, 1, 2}), std::complex<double>(0.0));
  EXPECT_THROW((void)pair_state(PairKind::alpha, 2, 2, 4), std::invalid_argument);
  EXPECT_THROW((void)pair_state(PairKind::alpha, 0, 2, 4), std::invalid_argument);
}

TEST(TensorPairs, RejectsBadCoverage) {
  const std::array<PairFactor, 1> one{{{PairKind::alpha, 1, 2}}};
  EXPECT_THROW((void)tensor_pairs(one, 4), std::invalid_argument);
  const std::array<PairFactor, 2> twice{{{PairKind::alpha, 1, 2}, {PairKind::beta, 2, 3}}};
  EXPECT_THROW((void)tensor_pairs(twice, 4), std::invalid_argument);
  const std::array<PairFactor, 2> outside{{{PairKind::alpha, 1, 2}, {PairKind::beta, 3, 5}}};
  EXPECT_THROW((void)tensor_pairs(outside, 4), std::invalid_argument);
}

TEST(TopologicalBasis, MatchesExplicitSum) {
  const TopologicalBasis basis = build_topological_basis();
  for (std::size_t idx = 0; idx < 81; ++idx) {
    const auto c = StateVector::config_of(idx, 4);
    const std::array<int, 4> n{c[0], c[1], c[2], c[3]};
    EXPECT_LT(std::abs(basis.e1.amplitudes()(static_cast<Eigen::Index>(idx)) - e1_amp(n)), kTol);
    EXPECT_LT(std::abs(basis.e2.amplitudes()(static_cast<Eigen::Index>(idx)) - e2_amp(n)), kTol);
  }
  // |3111> only arises from gamma_12 alpha_34.
  EXPECT_LT(std::abs(basis.e1.at(std::array{3, 1, 1, 1}) - w(2) / (3.0 * std::sqrt(3.0))), kTol);
}

TEST(TopologicalBasis, Orthonormal) {
  const TopologicalBasis basis = build_topological_basis();
  EXPECT_LT(frobenius_distance(basis.gram(), identity(2)), kTol);
}

TEST(TopologicalBasis, KetbraEqualsLocalizedTL) {
  for (int i = 1; i <= 3; ++i) {
    EXPECT_LT(frobenius_distance(tl_ketbra(i, 4), tl_localized(4, i)), 1e-12) << i;
  }
  EXPECT_LT(frobenius_distance(tl_ketbra(1, 2), tl_localized(2, 1)), 1e-12);
  EXPECT_THROW((void)tl_ketbra(4, 4), std::out_of_range);
}

TEST(TopologicalBasis, JonesProjections) {
  const TopologicalBasis basis = build_topological_basis();
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix t = tl_localized(4, i);
    const Projection pt = project_operator(t, basis);
    EXPECT_LT(pt.leakage, 1e-10);
    EXPECT_LT(frobenius_distance(pt.matrix, jones_reference(i, JonesKind::tl)), 1e-12) << i;

    const Projection pb = project_operator(braid_from_tl(t), basis);
    EXPECT_LT(pb.leakage, 1e-10);
    EXPECT_LT(frobenius_distance(pb.matrix, jones_reference(i, JonesKind::braid)), 1e-12) << i;
  }
}

TEST(TopologicalBasis, JonesReferenceIsRepresentation) {
  const double d = std::sqrt(3.0);
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix t = jones_reference(i, JonesKind::tl);
    EXPECT_LT(frobenius_distance(t * t, d * t), kTol);
    EXPECT_LT(unitarity_residual(jones_reference(i, JonesKind::braid)), kTol);
  }
  const ComplexMatrix t1 = jones_reference(1, JonesKind::tl);
  const ComplexMatrix t2 = jones_reference(2, JonesKind::tl);
  EXPECT_LT(frobenius_distance(t1 * t2 * t1, t1), kTol);
  EXPECT_LT(frobenius_distance(t2 * t1 * t2, t2), kTol);
  EXPECT_THROW((void)jones_reference(0, JonesKind::tl), std::out_of_range);
}

TEST(TopologicalBasis, FarGeneratorsCommute) {
  EXPECT_LT(commutator_norm(tl_localized(4, 1), tl_localized(4, 3)), kTol);
}

TEST(TopologicalBasis, ProjectionShapeGuard) {
  EXPECT_THROW((void)project_operator(identity(9), build_topological_basis()), DimensionMismatch);
}
