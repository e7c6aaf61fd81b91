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

#include "parabraid/constants.hpp"
#include "parabraid/linalg.hpp"
#include "parabraid/state.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace parabraid {

/// Amplitudes of |Psi(theta)> = A_23(theta)|11> over the w^2 sector basis
/// (|11>, |23>, |32>):
///   cos(theta) - (i/3) sin(theta),  (2i/3) w sin(theta),  (2i/3) w^2 sin(theta).
template <typename Scalar = double>
std::array<std::complex<Scalar>, 3> psi_sector_amplitudes(Scalar theta) {
  const Scalar s = std::sin(theta);
  const Scalar two_thirds = Scalar(2) / Scalar(3);
  return {std::complex<Scalar>(std::cos(theta), -s / Scalar(3)),
          kI<Scalar> * (two_thirds * s) * kOmega<Scalar>,
          kI<Scalar> * (two_thirds * s) * kOmega2<Scalar>};
}

template <typename Scalar>
Scalar l1_of(std::span<const std::complex<Scalar>> amplitudes) {
  Scalar sum = 0;
  for (const auto& a : amplitudes) sum += std::abs(a);
  return sum;
}

/// -sum |a|^2 ln |a|^2 with 0 ln 0 = 0. Equals the von Neumann entropy when
/// the amplitudes are the Schmidt coefficients of a bipartite pure state.
template <typename Scalar>
Scalar schmidt_entropy(std::span<const std::complex<Scalar>> amplitudes) {
  Scalar s = 0;
  for (const auto& a : amplitudes) {
    const Scalar p = std::norm(a);
    if (p > Scalar(0)) s -= p * std::log(p);
  }
  return s;
}

/// |Psi(theta)> on two qutrits (natural basis, 9 amplitudes).
StateVector psi_theta(double theta);

/// Sum of amplitude moduli over the natural basis.
double l1_norm(const StateVector& state);

/// Reduced density matrix of a two-qutrit pure state, keeping site 1 or 2.
ComplexMatrix partial_trace(const StateVector& state, int keep);

/// Raised when a density matrix has the wrong trace or a clearly negative
/// eigenvalue.
class InvalidDensityMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// -sum lambda ln lambda in nats. Eigenvalues in [-1e-12, 0) are clipped to 0.
double von_neumann_entropy(const ComplexMatrix& rho);

struct ThetaSample {
  double theta = 0.0;
  double l1 = 0.0;
  double entropy = 0.0;          // partial trace + eigensolver
  double schmidt_entropy = 0.0;  // from amplitude moduli directly
};

/// steps points uniformly spaced over [min, max], both endpoints included.
std::vector<ThetaSample> sweep_theta(double min, double max, int steps);

enum class Curve { l1, entropy };

struct Extremum {
  enum class Kind { maximum, minimum };
  Curve curve = Curve::l1;
  Kind kind = Kind::maximum;
  double grid_theta = 0.0;  // best grid sample
  double theta = 0.0;       // refined location
  double value = 0.0;       // exact curve value at theta
  bool plateau = false;     // several equal grid values
  double plateau_lo = 0.0;
  double plateau_hi = 0.0;
};

struct ExtremaPair {
  std::size_t entropy_index = 0;
  std::size_t l1_index = 0;
  double gap = 0.0;
};

struct ExtremaReport {
  std::vector<Extremum> l1;
  std::vector<Extremum> entropy;
  // Each entropy extremum against the nearest l1 extremum of the same kind.
  std::vector<ExtremaPair> pairs;
  // Largest location gap in either direction (entropy -> l1 and l1 -> entropy).
  double max_gap = 0.0;

  /// Interior maximum with the largest value; nullptr if none.
  const Extremum* global_maximum(Curve curve) const;
};

/// Exact curves evaluated during refinement.
struct ThetaCurves {
  std::function<double(double)> l1;
  std::function<double(double)> entropy;
};

/// l1 and Schmidt entropy of |Psi(theta)>, straight from the closed-form
/// amplitudes.
ThetaCurves psi_curves();

/// Interior local extrema of both sampled curves, each refined on the exact
/// curve inside the bracket formed by its grid neighbours.
ExtremaReport find_extrema(const std::vector<ThetaSample>& samples, double refine_tol);
ExtremaReport find_extrema(const std::vector<ThetaSample>& samples, double refine_tol,
                           const ThetaCurves& curves);

}  // namespace parabraid
