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

#include <span>
#include <string>
#include <vector>

namespace parabraid {

/// Amplitudes over the N-qutrit computational basis.
///
/// A configuration (n_1, ..., n_N) with n_k in {1, 2, 3} lives at index
/// sum_k (n_k - 1) * 3^(N - k); site 1 is the most significant digit.
class StateVector {
 public:
  explicit StateVector(int nsites);
  StateVector(int nsites, ComplexVector amplitudes);

  int nsites() const noexcept { return nsites_; }
  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  ComplexVector& amplitudes() noexcept { return amplitudes_; }

  std::complex<double> at(std::span<const int> config) const;
  void set(std::span<const int> config, std::complex<double> value);

  double norm2() const { return amplitudes_.squaredNorm(); }
  bool is_normalized(double tol = 1e-12) const;

  /// <this|other>
  std::complex<double> inner(const StateVector& other) const;

  static std::size_t index_of(std::span<const int> config);
  static std::vector<int> config_of(std::size_t index, int nsites);
  /// "1231"-style label of a configuration.
  static std::string label_of(std::size_t index, int nsites);

 private:
  int nsites_;
  ComplexVector amplitudes_;
};

/// 3^n, with an overflow guard for silly n.
std::size_t qutrit_dim(int nsites);

}  // namespace parabraid
