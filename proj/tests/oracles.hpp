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

// Independent reference computations for the unit tests. Nothing here calls
// into the library; matrices are plain nested vectors.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Dense = std::vector<std::vector<cd>>;

inline Dense zeros(std::size_t rows, std::size_t cols) {
  return Dense(rows, std::vector<cd>(cols, cd(0.0)));
}

inline Dense from_eigen(const Eigen::MatrixXcd& m) {
  Dense out = zeros(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline Eigen::MatrixXcd to_eigen(const Dense& d) {
  Eigen::MatrixXcd m(d.size(), d.empty() ? 0 : d[0].size());
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c) m(r, c) = d[r][c];
  return m;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  Dense out = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Entry (i, j) of a (x) b from the index formula a[i / rb][j / cb] * b[i % rb][j % cb].
inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t rb = b.size();
  const std::size_t cb = b[0].size();
  Dense out = zeros(a.size() * rb, a[0].size() * cb);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[0].size(); ++j) out[i][j] = a[i / rb][j / cb] * b[i % rb][j % cb];
  return out;
}

inline const cd omega{std::cos(2 * std::numbers::pi / 3), std::sin(2 * std::numbers::pi / 3)};

inline Dense z3() {
  Dense z = zeros(3, 3);
  z[0][0] = 1.0;
  z[1][1] = omega;
  z[2][2] = omega * omega;
  return z;
}

inline Dense x3() {
  Dense x = zeros(3, 3);
  x[0][1] = x[1][2] = x[2][0] = 1.0;
  return x;
}

inline Dense eye(std::size_t n) {
  Dense d = zeros(n, n);
  for (std::size_t k = 0; k < n; ++k) d[k][k] = 1.0;
  return d;
}

inline Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = cd(g(rng), g(rng));
  return m;
}

inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_matrix(rng, n));
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

// |Psi(theta)> moduli squared from the closed form, sector order (11, 23, 32).
inline std::vector<double> psi_probabilities(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double p2 = (2.0 / 3.0 * s) * (2.0 / 3.0 * s);
  return {c * c + s * s / 9.0, p2, p2};
}

// Closed-form entropy of |Psi(theta)>.
inline double psi_entropy(double theta) {
  double total = 0.0;
  for (double p : psi_probabilities(theta))
    if (p > 0) total -= p * std::log(p);
  return total;
}

inline double psi_l1(double theta) {
  double total = 0.0;
  for (double p : psi_probabilities(theta)) total += std::sqrt(p);
  return total;
}

}  // namespace oracle
