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
#include "parabraid/report.hpp"

#include <vector>

namespace parabraid {

/// Clock matrix diag(1, omega, omega^2).
ComplexMatrix clock_z();
/// Cyclic shift with X|k> = |k-1 mod 3> (rows (0,1,0), (0,0,1), (1,0,0)).
ComplexMatrix shift_x();

/// The 2N Z3 parafermions of an N-qutrit register, Jordan-Wigner form:
///
///   C_{2k-1}^dagger = Z^{(k-1)} (x) X      (x) I^{(N-k)}
///   C_{2k}^dagger   = Z^{(k-1)} (x) (XZ)   (x) I^{(N-k)}
///
/// Parafermions 2k-1 and 2k belong to qutrit site k. Indices are 1-based.
class ParafermionSet {
 public:
  static constexpr int kMaxSites = 6;

  explicit ParafermionSet(int nsites);

  int nsites() const noexcept { return nsites_; }
  int count() const noexcept { return 2 * nsites_; }
  Eigen::Index dim() const noexcept { return ops_.front().rows(); }

  const ComplexMatrix& c(int k) const;
  const ComplexMatrix& c_dagger(int k) const;

  /// Qutrit site carrying parafermion k.
  static int site_of(int k) noexcept { return (k + 1) / 2; }

 private:
  void check_index(int k) const;

  int nsites_;
  std::vector<ComplexMatrix> ops_;
  std::vector<ComplexMatrix> daggers_;
};

/// Throws std::out_of_range unless 1 <= nsites <= ParafermionSet::kMaxSites.
ParafermionSet build_parafermions(int nsites);

/// Residuals of the parafermion algebra:
///   C_i C_j - omega C_j C_i   (every i < j)
///   C_i^2 - C_i^dagger, (C_i^dagger)^2 - C_i, C_i^3 - 1, C_i C_i^dagger - 1.
/// The exchange phase is read as omega^{sgn(j - i)}; the report notes that
/// reading and the residual of the alternative omega^2 reading.
AlgebraReport verify_parafermion_algebra(const ParafermionSet& set, double tol);

}  // namespace parabraid
