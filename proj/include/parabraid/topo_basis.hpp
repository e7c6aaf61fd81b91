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
#include "parabraid/state.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace parabraid {

/// Maximally entangled two-qutrit states, one per parity sector:
///   alpha = (|11> + w^2|23> + w|32>)/sqrt3
///   beta  = (|12> + |21> + |33>)/sqrt3
///   gamma = (|13> + w|22> + w^2|31>)/sqrt3
enum class PairKind { alpha, beta, gamma };

std::string pair_name(PairKind kind);

/// coefficients(a, b) is the amplitude of |a+1, b+1>.
ComplexMatrix pair_coefficients(PairKind kind);

/// One factor of a product of pair states: kind placed on (first, second),
/// the first ket slot on site `first`.
struct PairFactor {
  PairKind kind;
  int first;
  int second;
};

/// Product of pair states covering every site exactly once, assembled by
/// enumerating all configurations. Throws std::invalid_argument on
/// overlapping, missing or out-of-range sites.
StateVector tensor_pairs(std::span<const PairFactor> factors, int nsites);

/// The pair state on (site_i, site_j) of an nsites register, other sites
/// held at |1>. For nsites == 2 this is exactly the two-qutrit pair state.
StateVector pair_state(PairKind kind, int site_i, int site_j, int nsites);

/// Two orthonormal 4-qutrit vectors spanning the 4-anyon fusion space.
struct TopologicalBasis {
  StateVector e1{4};
  StateVector e2{4};

  /// 2x2 matrix of inner products <e_a|e_b>.
  ComplexMatrix gram() const;
  /// 81x2 matrix with columns e1, e2.
  ComplexMatrix columns() const;
};

/// Raised if the constructed vectors are not orthonormal; carries the Gram
/// matrix so a different embedding convention can be diagnosed.
class NotOrthonormal : public std::runtime_error {
 public:
  explicit NotOrthonormal(ComplexMatrix gram);
  const ComplexMatrix& gram() const noexcept { return gram_; }

 private:
  ComplexMatrix gram_;
};

/// e1 = (a12 g34 + b12 b34 + g12 a34)/sqrt3,
/// e2 = (i/sqrt2)(w a23 g41 + b23 b41 + w g23 a41) - e1/sqrt2.
/// Checks orthonormality to 1e-10 and throws NotOrthonormal otherwise.
TopologicalBasis build_topological_basis();

/// sqrt3 (|a><a| + |b><b| + |g><g|) on sites (i, i+1) of a 4-qutrit register.
ComplexMatrix tl_ketbra(int i, int nsites = 4);

struct Projection {
  ComplexMatrix matrix;  // 2x2, entries <e_a|op|e_b>
  double leakage = 0.0;  // max_b ||(1 - Pi) op |e_b>||
};

Projection project_operator(const ComplexMatrix& op, const TopologicalBasis& basis);

enum class JonesKind { tl, braid };

/// Literal 2x2 Jones-representation matrices for generator i in {1, 2, 3}.
ComplexMatrix jones_reference(int i, JonesKind kind);

}  // namespace parabraid
