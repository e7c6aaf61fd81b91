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
#include "parabraid/parafermion.hpp"
#include "parabraid/report.hpp"

#include <vector>

namespace parabraid {

enum class TLKind {
  nearest,    // T_i from parafermion pair (C_i, C_{i+1})
  localized,  // T'_i acting on qutrit pair (i, i+1)
};

struct TLFamily {
  TLKind kind = TLKind::nearest;
  int nsites = 0;
  std::vector<ComplexMatrix> elements;  // elements[i-1] is T_i
};

/// Raised by braid_from_tl when T^2 = sqrt(3) T fails.
class NotTemperleyLieb : public std::invalid_argument {
 public:
  explicit NotTemperleyLieb(double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// (1/sqrt3)(1 + w^2 C_i^dag C_{i+1} + w^2 C_i C_{i+1}^dag), 1 <= i <= 2N-1.
ComplexMatrix tl_nearest(const ParafermionSet& set, int i);

/// The 9x9 two-qutrit stencil T'. Entries are 0, 1/sqrt3, w/sqrt3, w^2/sqrt3.
const ComplexMatrix& tl_stencil();

/// I^{(i-1)} (x) T' (x) I^{(nsites-i-1)}, 1 <= i <= nsites-1.
ComplexMatrix tl_localized(int nsites, int i);

/// (1/sqrt3)(1 + w^2 C_{2i-1}^dag C_{2i+2} + w^2 C_{2i-1} C_{2i+2}^dag): the
/// same operator as tl_localized, assembled from parafermions.
ComplexMatrix tl_localized_parafermionic(const ParafermionSet& set, int i);

TLFamily nearest_family(const ParafermionSet& set);
TLFamily localized_family(int nsites);

/// B = w (e^{-i pi/6} T - 1). Throws NotTemperleyLieb when
/// ||T^2 - sqrt3 T||_F >= idempotency_tol.
ComplexMatrix braid_from_tl(const ComplexMatrix& t, double idempotency_tol = 1e-10);

/// Residuals of T_i^2 = sqrt3 T_i, Hermiticity, T_i T_{i+-1} T_i = T_i and
/// [T_i, T_j] = 0 for |i-j| >= 2. Nearest-neighbour commutator norms are
/// recorded as notes only: those pairs do not commute.
AlgebraReport verify_tl_algebra(const TLFamily& family, double tol);

/// ||b1 b2 b1 - b2 b1 b2||_F.
double braid_relation_residual(const ComplexMatrix& b1, const ComplexMatrix& b2);

/// Reference braid matrices B_12 = diag(e^{-i pi/3}, e^{i pi/3}, e^{-i pi/3}) (x) I
/// and the 9x9 B_23 table, used as literal references.
ComplexMatrix literal_b12();
ComplexMatrix literal_b23();

}  // namespace parabraid
