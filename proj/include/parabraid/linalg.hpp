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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parabraid {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

/// Raised when two operands have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation that needs a Hermitian input receives one whose
/// anti-Hermitian part exceeds the tolerance.
class NotHermitian : public std::invalid_argument {
 public:
  NotHermitian(double residual)
      : std::invalid_argument("matrix is not Hermitian: |H - H^dagger|_F = " +
                              std::to_string(residual)),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

namespace detail {

inline std::string shape_string(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <typename DerivedA, typename DerivedB>
void require_same_shape(const Eigen::MatrixBase<DerivedA>& a,
                        const Eigen::MatrixBase<DerivedB>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shapes " + shape_string(a.rows(), a.cols()) +
                            " and " + shape_string(b.rows(), b.cols()) + " differ");
  }
}

}  // namespace detail

template <typename Scalar = double>
[[nodiscard]] CMatrix<Scalar> identity(Eigen::Index dim) {
  return CMatrix<Scalar>::Identity(dim, dim);
}

/// Checked product: throws DimensionMismatch instead of relying on Eigen's
/// debug-only assertion.
template <typename DerivedA, typename DerivedB>
[[nodiscard]] auto mat_mul(const Eigen::MatrixBase<DerivedA>& a,
                           const Eigen::MatrixBase<DerivedB>& b)
    -> Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: inner dimensions of " +
                            detail::shape_string(a.rows(), a.cols()) + " and " +
                            detail::shape_string(b.rows(), b.cols()) + " differ");
  }
  return a * b;
}

/// Kronecker product. Block (i, j) of the result is a(i, j) * b, so the left
/// factor is the most significant index, as in StateVector.
template <typename DerivedA, typename DerivedB>
[[nodiscard]] auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
    -> Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  Result out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of a list of factors, leftmost factor most significant.
template <typename Scalar>
[[nodiscard]] CMatrix<Scalar> kron_all(const std::vector<CMatrix<Scalar>>& factors) {
  if (factors.empty()) {
    return CMatrix<Scalar>::Identity(1, 1);
  }
  CMatrix<Scalar> out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    out = kron(out, factors[k]);
  }
  return out;
}

/// m ⊗ m ⊗ ... ⊗ m (count factors); count == 0 gives the 1x1 identity.
template <typename Derived>
[[nodiscard]] auto kron_power(const Eigen::MatrixBase<Derived>& m, int count)
    -> Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  using Result = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out = Result::Identity(1, 1);
  for (int k = 0; k < count; ++k) {
    out = kron(out, m);
  }
  return out;
}

template <typename Derived>
[[nodiscard]] auto adjoint(const Eigen::MatrixBase<Derived>& a)
    -> Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  return a.adjoint();
}

/// sqrt(sum |a_ij - b_ij|^2).
template <typename DerivedA, typename DerivedB>
[[nodiscard]] auto frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                                      const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_same_shape(a, b, "frobenius_distance");
  return (a - b).norm();
}

template <typename DerivedA, typename DerivedB>
[[nodiscard]] auto commutator_norm(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_same_shape(a, b, "commutator_norm");
  return (a * b - b * a).norm();
}

/// ||U U^dagger - I||_F.
template <typename Derived>
[[nodiscard]] auto unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  using Result = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return (u * u.adjoint() - Result::Identity(u.rows(), u.cols())).norm();
}

/// Eigenvalues of a Hermitian matrix, in descending order.
///
/// Cyclic complex Jacobi: every off-diagonal pair (p, q) is annihilated by a
/// unitary plane rotation J = Phi * G, where Phi removes the phase of h(p, q)
/// and G is the classical real Jacobi rotation. Sweeps repeat until the
/// off-diagonal Frobenius mass falls below 1e-14 * max(1, ||h||_F).
template <typename Derived>
[[nodiscard]] auto hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& h,
                                         double hermitian_tol = 1e-10)
    -> std::vector<typename Eigen::NumTraits<typename Derived::Scalar>::Real> {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Cx = std::complex<Real>;
  using Mat = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic>;

  if (h.rows() != h.cols()) {
    throw DimensionMismatch("hermitian_eigenvalues: matrix is " +
                            detail::shape_string(h.rows(), h.cols()));
  }
  const Real skew = (h - h.adjoint()).norm();
  if (!(skew < static_cast<Real>(hermitian_tol))) {
    throw NotHermitian(static_cast<double>(skew));
  }

  // Work on the Hermitian part so that tiny input asymmetry does not leak.
  Mat a = (h + h.adjoint()).template cast<Cx>() / Real(2);
  const Eigen::Index n = a.rows();
  const Real scale = std::max(Real(1), a.norm());
  const Real stop = Real(1e-14) * scale;

  auto off_mass = [&] {
    Real s = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_mass() >= stop; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real r = std::abs(a(p, q));
        if (r == Real(0)) continue;
        const Cx phase = a(p, q) / r;  // e^{i phi}
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const Real tau = (aqq - app) / (Real(2) * r);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;
        // J restricted to the (p, q) plane.
        const Cx jpp = c;
        const Cx jpq = s;
        const Cx jqp = -s * std::conj(phase);
        const Cx jqq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cx akp = a(k, p);
          const Cx akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cx apk = a(p, k);
          const Cx aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = Cx(0);
        a(q, p) = Cx(0);
        a(p, p) = Cx(a(p, p).real());
        a(q, q) = Cx(a(q, q).real());
      }
    }
  }

  std::vector<Real> values(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = a(k, k).real();
  }
  std::sort(values.begin(), values.end(), std::greater<Real>());
  return values;
}

}  // namespace parabraid
