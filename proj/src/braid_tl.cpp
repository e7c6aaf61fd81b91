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

#include "parabraid/braid_tl.hpp"

#include "parabraid/constants.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <string>

namespace parabraid {

namespace {

// Stencil entries as powers of omega; -1 marks a zero.
// Row 5 column 7 is w^2: the matrix is Hermitian and equals the
// parafermionic form only with that entry.
constexpr std::array<std::array<int, 9>, 9> kStencilPowers{{
    {0, -1, -1, -1, -1, 1, -1, 2, -1},
    {-1, 0, -1, 0, -1, -1, -1, -1, 0},
    {-1, -1, 0, -1, 2, -1, 1, -1, -1},
    {-1, 0, -1, 0, -1, -1, -1, -1, 0},
    {-1, -1, 1, -1, 0, -1, 2, -1, -1},
    {2, -1, -1, -1, -1, 0, -1, 1, -1},
    {-1, -1, 2, -1, 1, -1, 0, -1, -1},
    {1, -1, -1, -1, -1, 2, -1, 0, -1},
    {-1, 0, -1, 0, -1, -1, -1, -1, 0},
}};

// B_23 = (i w / sqrt3) * M with M entries powers of omega (-1 = zero).
constexpr std::array<std::array<int, 9>, 9> kB23Powers{{
    {1, -1, -1, -1, -1, 1, -1, 0, -1},
    {-1, 1, -1, 1, -1, -1, -1, -1, 0},
    {-1, -1, 1, -1, 1, -1, 0, -1, -1},
    {-1, 0, -1, 1, -1, -1, -1, -1, 1},
    {-1, -1, 0, -1, 1, -1, 1, -1, -1},
    {0, -1, -1, -1, -1, 1, -1, 1, -1},
    {-1, -1, 1, -1, 0, -1, 1, -1, -1},
    {1, -1, -1, -1, -1, 0, -1, 1, -1},
    {-1, 1, -1, 0, -1, -1, -1, -1, 1},
}};

ComplexMatrix from_powers(const std::array<std::array<int, 9>, 9>& powers,
                          std::complex<double> prefactor) {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      const int p = powers[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (p >= 0) m(r, c) = prefactor * omega_power(p);
    }
  }
  return m;
}

ComplexMatrix tl_from_pair(const ComplexMatrix& a, const ComplexMatrix& a_dag,
                           const ComplexMatrix& b, const ComplexMatrix& b_dag) {
  ComplexMatrix t = identity(a.rows());
  t += kOmega2<> * (a_dag * b);
  t += kOmega2<> * (a * b_dag);
  return kInvSqrt3<> * t;
}

std::string tl_name(TLKind kind, std::size_t i) {
  return (kind == TLKind::nearest ? "T" : "T'") + std::to_string(i + 1);
}

}  // namespace

NotTemperleyLieb::NotTemperleyLieb(double residual)
    : std::invalid_argument("braid_from_tl: |T^2 - sqrt3 T|_F = " + std::to_string(residual)),
      residual_(residual) {}

ComplexMatrix tl_nearest(const ParafermionSet& set, int i) {
  if (i < 1 || i > set.count() - 1) {
    throw std::out_of_range("tl_nearest: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(set.count() - 1) + "]");
  }
  return tl_from_pair(set.c(i), set.c_dagger(i), set.c(i + 1), set.c_dagger(i + 1));
}

const ComplexMatrix& tl_stencil() {
  static const ComplexMatrix stencil = from_powers(kStencilPowers, kInvSqrt3<>);
  return stencil;
}

ComplexMatrix tl_localized(int nsites, int i) {
  if (nsites < 2 || i < 1 || i > nsites - 1) {
    throw std::out_of_range("tl_localized: index " + std::to_string(i) + " invalid for " +
                            std::to_string(nsites) + " qutrits");
  }
  const ComplexMatrix id3 = identity(3);
  return kron(kron(kron_power(id3, i - 1), tl_stencil()), kron_power(id3, nsites - i - 1));
}

ComplexMatrix tl_localized_parafermionic(const ParafermionSet& set, int i) {
  if (i < 1 || i > set.nsites() - 1) {
    throw std::out_of_range("tl_localized_parafermionic: index " + std::to_string(i) +
                            " invalid for " + std::to_string(set.nsites()) + " qutrits");
  }
  const int a = 2 * i - 1;
  const int b = 2 * i + 2;
  return tl_from_pair(set.c(a), set.c_dagger(a), set.c(b), set.c_dagger(b));
}

TLFamily nearest_family(const ParafermionSet& set) {
  TLFamily family{TLKind::nearest, set.nsites(), {}};
  for (int i = 1; i < set.count(); ++i) family.elements.push_back(tl_nearest(set, i));
  return family;
}

TLFamily localized_family(int nsites) {
  TLFamily family{TLKind::localized, nsites, {}};
  for (int i = 1; i < nsites; ++i) family.elements.push_back(tl_localized(nsites, i));
  return family;
}

ComplexMatrix braid_from_tl(const ComplexMatrix& t, double idempotency_tol) {
  if (t.rows() != t.cols()) {
    throw DimensionMismatch("braid_from_tl: matrix is not square");
  }
  const double residual = (t * t - kQuantumDimension<> * t).norm();
  if (!(residual < idempotency_tol)) {
    throw NotTemperleyLieb(residual);
  }
  return kOmega<> * (kPhaseMinusPi6<> * t - identity(t.rows()));
}

AlgebraReport verify_tl_algebra(const TLFamily& family, double tol) {
  AlgebraReport report;
  const auto& ts = family.elements;
  const double d = kQuantumDimension<>;

  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string ti = tl_name(family.kind, i);
    report.add(ti + "^2 - d " + ti, frobenius_distance(ts[i] * ts[i], d * ts[i]), tol);
    report.add(ti + " hermiticity", frobenius_distance(ts[i], ts[i].adjoint()), tol);
  }
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const std::string a = tl_name(family.kind, i);
    const std::string b = tl_name(family.kind, i + 1);
    report.add(a + b + a + " - " + a, frobenius_distance(ts[i] * ts[i + 1] * ts[i], ts[i]), tol);
    report.add(b + a + b + " - " + b,
               frobenius_distance(ts[i + 1] * ts[i] * ts[i + 1], ts[i + 1]), tol);
    std::ostringstream note;
    note << "[" << a << "," << b << "] norm (adjacent, not required to vanish) = "
         << commutator_norm(ts[i], ts[i + 1]);
    report.note(note.str());
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 2; j < ts.size(); ++j) {
      report.add("[" + tl_name(family.kind, i) + "," + tl_name(family.kind, j) + "]",
                 commutator_norm(ts[i], ts[j]), tol);
    }
  }
  return report;
}

double braid_relation_residual(const ComplexMatrix& b1, const ComplexMatrix& b2) {
  detail::require_same_shape(b1, b2, "braid_relation_residual");
  return (b1 * b2 * b1 - b2 * b1 * b2).norm();
}

ComplexMatrix literal_b12() {
  ComplexMatrix site = ComplexMatrix::Zero(3, 3);
  site(0, 0) = std::conj(kPhasePi3<>);
  site(1, 1) = kPhasePi3<>;
  site(2, 2) = std::conj(kPhasePi3<>);
  return kron(site, identity(3));
}

ComplexMatrix literal_b23() { return from_powers(kB23Powers, kI<> * kOmega<> * kInvSqrt3<>); }

}  // namespace parabraid
