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

#include "parabraid/state.hpp"

namespace parabraid {

std::size_t qutrit_dim(int nsites) {
  if (nsites < 0 || nsites > 20) {
    throw std::invalid_argument("qutrit_dim: unsupported site count " + std::to_string(nsites));
  }
  std::size_t d = 1;
  for (int k = 0; k < nsites; ++k) d *= 3;
  return d;
}

StateVector::StateVector(int nsites)
    : nsites_(nsites),
      amplitudes_(ComplexVector::Zero(static_cast<Eigen::Index>(qutrit_dim(nsites)))) {
  if (nsites < 1) {
    throw std::invalid_argument("StateVector: nsites must be positive");
  }
}

StateVector::StateVector(int nsites, ComplexVector amplitudes)
    : nsites_(nsites), amplitudes_(std::move(amplitudes)) {
  if (nsites < 1) {
    throw std::invalid_argument("StateVector: nsites must be positive");
  }
  if (static_cast<std::size_t>(amplitudes_.size()) != qutrit_dim(nsites)) {
    throw DimensionMismatch("StateVector: " + std::to_string(amplitudes_.size()) +
                            " amplitudes for " + std::to_string(nsites) + " qutrits");
  }
}

std::size_t StateVector::index_of(std::span<const int> config) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const int n = config[k];
    if (n < 1 || n > 3) {
      throw std::out_of_range("qutrit level " + std::to_string(n) + " at site " +
                              std::to_string(k + 1) + " is not in {1,2,3}");
    }
    index = index * 3 + static_cast<std::size_t>(n - 1);
  }
  return index;
}

std::vector<int> StateVector::config_of(std::size_t index, int nsites) {
  std::vector<int> config(static_cast<std::size_t>(nsites));
  for (int k = nsites - 1; k >= 0; --k) {
    config[static_cast<std::size_t>(k)] = static_cast<int>(index % 3) + 1;
    index /= 3;
  }
  return config;
}

std::string StateVector::label_of(std::size_t index, int nsites) {
  std::string label;
  for (int n : config_of(index, nsites)) label.push_back(static_cast<char>('0' + n));
  return label;
}

std::complex<double> StateVector::at(std::span<const int> config) const {
  if (static_cast<int>(config.size()) != nsites_) {
    throw DimensionMismatch("StateVector::at: configuration length differs from nsites");
  }
  return amplitudes_(static_cast<Eigen::Index>(index_of(config)));
}

void StateVector::set(std::span<const int> config, std::complex<double> value) {
  if (static_cast<int>(config.size()) != nsites_) {
    throw DimensionMismatch("StateVector::set: configuration length differs from nsites");
  }
  amplitudes_(static_cast<Eigen::Index>(index_of(config))) = value;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm2() - 1.0) < tol; }

std::complex<double> StateVector::inner(const StateVector& other) const {
  if (other.nsites_ != nsites_) {
    throw DimensionMismatch("StateVector::inner: site counts differ");
  }
  return amplitudes_.dot(other.amplitudes_);
}

}  // namespace parabraid
