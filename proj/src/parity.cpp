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

#include "parabraid/parity.hpp"

#include "parabraid/constants.hpp"

#include <cmath>

namespace parabraid {

namespace {

std::size_t pair_index(int i, int j) { return static_cast<std::size_t>(3 * (i - 1) + (j - 1)); }

}  // namespace

const std::array<ParitySector, 3>& parity_sectors() {
  static const std::array<ParitySector, 3> sectors{{
      {Parity::omega2, kOmega2<>, {{{1, 1}, {2, 3}, {3, 2}}}},
      {Parity::one, {1.0, 0.0}, {{{1, 2}, {2, 1}, {3, 3}}}},
      {Parity::omega, kOmega<>, {{{1, 3}, {2, 2}, {3, 1}}}},
  }};
  return sectors;
}

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::omega2:
      return "omega2";
    case Parity::one:
      return "1";
    case Parity::omega:
      return "omega";
  }
  return "?";
}

ComplexMatrix parity_operator() {
  ComplexMatrix p = ComplexMatrix::Zero(9, 9);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const auto k = static_cast<Eigen::Index>(pair_index(i, j));
      p(k, k) = omega_power(i + j);
    }
  }
  return p;
}

ComplexMatrix reorder_unitary() {
  // U(natural index, reordered position) = 1.
  ComplexMatrix u = ComplexMatrix::Zero(9, 9);
  std::size_t position = 0;
  for (const auto& sector : parity_sectors()) {
    for (const auto& [i, j] : sector.basis) {
      u(static_cast<Eigen::Index>(pair_index(i, j)), static_cast<Eigen::Index>(position)) = 1.0;
      ++position;
    }
  }
  return u;
}

NotParityCommuting::NotParityCommuting(double norm)
    : std::invalid_argument("sector_blocks: operator does not commute with parity, |[op,P]|_F = " +
                            std::to_string(norm)),
      norm_(norm) {}

ComplexMatrix SectorDecomposition::reconstruct() const {
  ComplexMatrix blocked = ComplexMatrix::Zero(9, 9);
  for (int s = 0; s < 3; ++s) blocked.block(3 * s, 3 * s, 3, 3) = blocks[s];
  const ComplexMatrix u = reorder_unitary();
  return u * blocked * u.adjoint();
}

SectorDecomposition sector_blocks(const ComplexMatrix& op, double commute_tol) {
  if (op.rows() != 9 || op.cols() != 9) {
    throw DimensionMismatch("sector_blocks: expected a 9x9 operator");
  }
  const double comm = commutator_norm(op, parity_operator());
  if (!(comm < commute_tol)) {
    throw NotParityCommuting(comm);
  }
  const ComplexMatrix u = reorder_unitary();
  const ComplexMatrix conj = u.adjoint() * op * u;

  SectorDecomposition out;
  double off = 0.0;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c)
      if (r / 3 != c / 3) off += std::norm(conj(r, c));
  out.leakage = std::sqrt(off);
  for (int s = 0; s < 3; ++s) {
    out.blocks[static_cast<std::size_t>(s)] = conj.block(3 * s, 3 * s, 3, 3);
  }
  return out;
}

ComplexMatrix reduced_a12(double theta) {
  const std::complex<double> minus = std::polar(1.0, -theta);
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = minus;
  a(1, 1) = std::conj(minus);
  a(2, 2) = minus;
  return a;
}

ComplexMatrix reduced_a23(double theta) {
  const double s = std::sin(theta);
  const std::complex<double> diag{std::cos(theta), -s / 3.0};
  const std::complex<double> up = kI<> * (2.0 / 3.0) * s * kOmega2<>;
  const std::complex<double> down = kI<> * (2.0 / 3.0) * s * kOmega<>;
  ComplexMatrix a(3, 3);
  a << diag, up, down,
       down, diag, up,
       up, down, diag;
  return a;
}

}  // namespace parabraid
