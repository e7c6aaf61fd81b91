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

#pragma once

#include "parabraid/linalg.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace parabraid {

/// Eigenvalue label of the two-qutrit parity P|ij> = w^{i+j}|ij>.
enum class Parity { omega2 = 0, one = 1, omega = 2 };

struct ParitySector {
  Parity parity;
  std::complex<double> eigenvalue;
  std::array<std::array<int, 2>, 3> basis;  // 1-based levels (i, j)
};

/// The three sectors in block order: w^2 {11,23,32}, 1 {12,21,33}, w {13,22,31}.
const std::array<ParitySector, 3>& parity_sectors();

std::string parity_name(Parity p);

/// 9x9 diagonal P.
ComplexMatrix parity_operator();

/// The 9x9 permutation U whose columns regroup the natural basis so that
/// U^dagger * op * U is block diagonal in sector order.
ComplexMatrix reorder_unitary();

class NotParityCommuting : public std::invalid_argument {
 public:
  explicit NotParityCommuting(double norm);
  double commutator_norm() const noexcept { return norm_; }

 private:
  double norm_;
};

struct SectorDecomposition {
  std::array<ComplexMatrix, 3> blocks;  // indexed by static_cast<int>(Parity)
  double leakage = 0.0;                 // off-block Frobenius mass of U^dag op U

  const ComplexMatrix& block(Parity p) const { return blocks[static_cast<std::size_t>(p)]; }
  /// U * blockdiag(blocks) * U^dagger.
  ComplexMatrix reconstruct() const;
};

/// Throws NotParityCommuting if ||[op, P]||_F >= commute_tol.
SectorDecomposition sector_blocks(const ComplexMatrix& op, double commute_tol = 1e-10);

/// w^2-sector block of R_12(theta): diag(e^{-i theta}, e^{i theta}, e^{-i theta}).
ComplexMatrix reduced_a12(double theta);

/// w^2-sector block of R_23(theta). Diagonal cos(theta) - (i/3) sin(theta);
/// each row is a cyclic shift of (diag, (2i/3) w^2 sin, (2i/3) w sin).
ComplexMatrix reduced_a23(double theta);

}  // namespace parabraid
