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

#include "parabraid/topo_basis.hpp"

#include "parabraid/constants.hpp"

#include <numbers>
#include <vector>

namespace parabraid {

std::string pair_name(PairKind kind) {
  switch (kind) {
    case PairKind::alpha:
      return "alpha";
    case PairKind::beta:
      return "beta";
    case PairKind::gamma:
      return "gamma";
  }
  return "?";
}

ComplexMatrix pair_coefficients(PairKind kind) {
  ComplexMatrix c = ComplexMatrix::Zero(3, 3);
  switch (kind) {
    case PairKind::alpha:
      c(0, 0) = 1.0;
      c(1, 2) = kOmega2<>;
      c(2, 1) = kOmega<>;
      break;
    case PairKind::beta:
      c(0, 1) = 1.0;
      c(1, 0) = 1.0;
      c(2, 2) = 1.0;
      break;
    case PairKind::gamma:
      c(0, 2) = 1.0;
      c(1, 1) = kOmega<>;
      c(2, 0) = kOmega2<>;
      break;
  }
  return kInvSqrt3<> * c;
}

StateVector tensor_pairs(std::span<const PairFactor> factors, int nsites) {
  std::vector<int> owner(static_cast<std::size_t>(nsites), 0);
  for (const auto& f : factors) {
    for (int site : {f.first, f.second}) {
      if (site < 1 || site > nsites) {
        throw std::invalid_argument("tensor_pairs: site " + std::to_string(site) +
                                    " outside [1, " + std::to_string(nsites) + "]");
      }
      if (owner[static_cast<std::size_t>(site - 1)]++ != 0) {
        throw std::invalid_argument("tensor_pairs: site " + std::to_string(site) +
                                    " used twice");
      }
    }
  }
  for (int site = 1; site <= nsites; ++site) {
    if (owner[static_cast<std::size_t>(site - 1)] == 0) {
      throw std::invalid_argument("tensor_pairs: site " + std::to_string(site) + " not covered");
    }
  }

  std::vector<ComplexMatrix> coeffs;
  for (const auto& f : factors) coeffs.push_back(pair_coefficients(f.kind));

  StateVector out(nsites);
  for (Eigen::Index idx = 0; idx < out.dim(); ++idx) {
    const auto config = StateVector::config_of(static_cast<std::size_t>(idx), nsites);
    std::complex<double> amp = 1.0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const int a = config[static_cast<std::size_t>(factors[k].first - 1)] - 1;
      const int b = config[static_cast<std::size_t>(factors[k].second - 1)] - 1;
      amp *= coeffs[k](a, b);
    }
    out.amplitudes()(idx) = amp;
  }
  return out;
}

StateVector pair_state(PairKind kind, int site_i, int site_j, int nsites) {
  if (site_i < 1 || site_i > nsites || site_j < 1 || site_j > nsites || site_i == site_j) {
    throw std::invalid_argument("pair_state: sites (" + std::to_string(site_i) + ", " +
                                std::to_string(site_j) + ") invalid for " +
                                std::to_string(nsites) + " qutrits");
  }
  const ComplexMatrix c = pair_coefficients(kind);
  StateVector out(nsites);
  std::vector<int> config(static_cast<std::size_t>(nsites), 1);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      config[static_cast<std::size_t>(site_i - 1)] = a;
      config[static_cast<std::size_t>(site_j - 1)] = b;
      out.set(config, c(a - 1, b - 1));
    }
  }
  return out;
}

ComplexMatrix TopologicalBasis::gram() const {
  const ComplexMatrix cols = columns();
  return cols.adjoint() * cols;
}

ComplexMatrix TopologicalBasis::columns() const {
  ComplexMatrix cols(e1.dim(), 2);
  cols.col(0) = e1.amplitudes();
  cols.col(1) = e2.amplitudes();
  return cols;
}

NotOrthonormal::NotOrthonormal(ComplexMatrix gram)
    : std::runtime_error("topological basis is not orthonormal"), gram_(std::move(gram)) {}

TopologicalBasis build_topological_basis() {
  using enum PairKind;
  auto product = [](PairKind left, int l1, int l2, PairKind right, int r1, int r2) {
    const std::array<PairFactor, 2> f{{{left, l1, l2}, {right, r1, r2}}};
    return tensor_pairs(f, 4).amplitudes();
  };

  TopologicalBasis basis;
  basis.e1.amplitudes() = kInvSqrt3<> * (product(alpha, 1, 2, gamma, 3, 4) +
                                         product(beta, 1, 2, beta, 3, 4) +
                                         product(gamma, 1, 2, alpha, 3, 4));

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const ComplexVector crossed = kOmega<> * product(alpha, 2, 3, gamma, 4, 1) +
                                product(beta, 2, 3, beta, 4, 1) +
                                kOmega<> * product(gamma, 2, 3, alpha, 4, 1);
  basis.e2.amplitudes() =
      (kI<> * inv_sqrt2) * crossed - inv_sqrt2 * basis.e1.amplitudes();

  const ComplexMatrix g = basis.gram();
  if ((g - identity(2)).norm() > 1e-10) throw NotOrthonormal(g);
  return basis;
}

ComplexMatrix tl_ketbra(int i, int nsites) {
  if (i < 1 || i > nsites - 1) {
    throw std::out_of_range("tl_ketbra: index " + std::to_string(i) + " invalid for " +
                            std::to_string(nsites) + " qutrits");
  }
  ComplexMatrix pair_projector = ComplexMatrix::Zero(9, 9);
  for (PairKind kind : {PairKind::alpha, PairKind::beta, PairKind::gamma}) {
    const ComplexVector v = pair_state(kind, 1, 2, 2).amplitudes();
    pair_projector += v * v.adjoint();
  }
  const ComplexMatrix id3 = identity(3);
  return kQuantumDimension<> *
         kron(kron(kron_power(id3, i - 1), pair_projector), kron_power(id3, nsites - i - 1));
}

Projection project_operator(const ComplexMatrix& op, const TopologicalBasis& basis) {
  const ComplexMatrix e = basis.columns();
  if (op.rows() != e.rows() || op.cols() != e.rows()) {
    throw DimensionMismatch("project_operator: operator is not " + std::to_string(e.rows()) +
                            "x" + std::to_string(e.rows()));
  }
  const ComplexMatrix image = op * e;
  Projection p;
  p.matrix = e.adjoint() * image;
  const ComplexMatrix residual = image - e * p.matrix;
  for (Eigen::Index b = 0; b < residual.cols(); ++b) {
    p.leakage = std::max(p.leakage, residual.col(b).norm());
  }
  return p;
}

ComplexMatrix jones_reference(int i, JonesKind kind) {
  if (i < 1 || i > 3) {
    throw std::out_of_range("jones_reference: generator " + std::to_string(i) +
                            " outside {1, 2, 3}");
  }
  const double r3 = std::numbers::sqrt3;
  const double r2 = std::numbers::sqrt2;
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  if (kind == JonesKind::tl) {
    if (i == 2) {
      m << 1.0, r2, r2, 2.0;
      m /= r3;
    } else {
      m(0, 0) = r3;
    }
  } else if (i == 2) {
    m << kPhaseMinusPi6<>, kI<> * r2, kI<> * r2, std::conj(kPhaseMinusPi6<>);
    m /= r3;
  } else {
    m(0, 0) = kPhasePi3<>;
    m(1, 1) = std::conj(kPhasePi3<>);
  }
  return m;
}

}  // namespace parabraid
