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

#include "parabraid/entanglement.hpp"

#include "parabraid/extremum.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

namespace parabraid {

namespace {

constexpr double kClipFloor = -1e-12;
constexpr double kTraceTol = 1e-10;

// Natural-basis positions of the w^2 sector (|11>, |23>, |32>).
constexpr std::array<Eigen::Index, 3> kSectorIndex{0, 5, 7};

void require_pair(const StateVector& state, const char* what) {
  if (state.nsites() != 2) {
    throw DimensionMismatch(std::string(what) + ": expected a two-qutrit state, got " +
                            std::to_string(state.nsites()) + " qutrits");
  }
}

}  // namespace

StateVector psi_theta(double theta) {
  StateVector psi(2);
  const auto a = psi_sector_amplitudes(theta);
  for (std::size_t k = 0; k < 3; ++k) psi.amplitudes()(kSectorIndex[k]) = a[k];
  return psi;
}

double l1_norm(const StateVector& state) { return state.amplitudes().cwiseAbs().sum(); }

ComplexMatrix partial_trace(const StateVector& state, int keep) {
  require_pair(state, "partial_trace");
  if (keep != 1 && keep != 2) {
    throw std::out_of_range("partial_trace: keep must be 1 or 2");
  }
  // m(i, j) = <ij|psi>; row index is site 1.
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = state.amplitudes()(3 * i + j);
  if (keep == 1) return m * m.adjoint();
  return m.transpose() * m.conjugate();
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const std::complex<double> tr = rho.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvalidDensityMatrix("von_neumann_entropy: trace " + std::to_string(tr.real()) + " + " +
                               std::to_string(tr.imag()) + "i is not 1");
  }
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    if (lambda < kClipFloor) {
      throw InvalidDensityMatrix("von_neumann_entropy: negative eigenvalue " +
                                 std::to_string(lambda));
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

std::vector<ThetaSample> sweep_theta(double min, double max, int steps) {
  if (steps < 2 || !std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw std::invalid_argument("sweep_theta: need finite min < max and steps >= 2");
  }
  std::vector<ThetaSample> samples;
  samples.reserve(static_cast<std::size_t>(steps));
  const double step = (max - min) / (steps - 1);
  for (int k = 0; k < steps; ++k) {
    const double theta = k == steps - 1 ? max : min + k * step;
    const StateVector psi = psi_theta(theta);
    const auto amps = psi_sector_amplitudes(theta);
    samples.push_back({theta, l1_norm(psi), von_neumann_entropy(partial_trace(psi, 1)),
                       schmidt_entropy<double>(amps)});
  }
  return samples;
}

ThetaCurves psi_curves() {
  return {[](double theta) {
            const auto a = psi_sector_amplitudes(theta);
            return l1_of<double>(a);
          },
          [](double theta) {
            const auto a = psi_sector_amplitudes(theta);
            return schmidt_entropy<double>(a);
          }};
}

const Extremum* ExtremaReport::global_maximum(Curve curve) const {
  const auto& list = curve == Curve::l1 ? l1 : entropy;
  const Extremum* best = nullptr;
  for (const auto& e : list) {
    if (e.kind == Extremum::Kind::maximum && (best == nullptr || e.value > best->value)) best = &e;
  }
  return best;
}

namespace {

std::vector<Extremum> locate(const std::vector<ThetaSample>& samples, Curve curve,
                             const std::function<double(double)>& exact, double refine_tol) {
  auto value = [&](std::size_t k) {
    return curve == Curve::l1 ? samples[k].l1 : samples[k].entropy;
  };
  std::vector<Extremum> out;
  const std::size_t n = samples.size();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start;
    while (end + 1 < n && value(end + 1) == value(start)) ++end;
    if (start > 0 && end + 1 < n) {
      const double v = value(start);
      const double left = value(start - 1);
      const double right = value(end + 1);
      const bool is_max = left < v && right < v;
      const bool is_min = left > v && right > v;
      if (is_max || is_min) {
        Extremum e;
        e.curve = curve;
        e.kind = is_max ? Extremum::Kind::maximum : Extremum::Kind::minimum;
        e.grid_theta = samples[start].theta;
        e.plateau = end > start;
        e.plateau_lo = samples[start].theta;
        e.plateau_hi = samples[end].theta;
        const double sign = is_max ? 1.0 : -1.0;
        e.theta = refine_maximum([&](double t) { return sign * exact(t); },
                                 samples[start - 1].theta, samples[end + 1].theta, refine_tol);
        e.value = exact(e.theta);
        out.push_back(e);
      }
    }
    start = end + 1;
  }
  return out;
}

std::optional<std::pair<std::size_t, double>> nearest_same_kind(const Extremum& e,
                                                                const std::vector<Extremum>& pool) {
  std::optional<std::pair<std::size_t, double>> best;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (pool[k].kind != e.kind) continue;
    const double gap = std::abs(pool[k].theta - e.theta);
    if (!best || gap < best->second) best = std::make_pair(k, gap);
  }
  return best;
}

}  // namespace

ExtremaReport find_extrema(const std::vector<ThetaSample>& samples, double refine_tol) {
  return find_extrema(samples, refine_tol, psi_curves());
}

ExtremaReport find_extrema(const std::vector<ThetaSample>& samples, double refine_tol,
                           const ThetaCurves& curves) {
  if (samples.size() < 3) {
    throw std::invalid_argument("find_extrema: need at least 3 samples");
  }
  if (!(refine_tol > 0.0)) {
    throw std::invalid_argument("find_extrema: refine_tol must be positive");
  }
  ExtremaReport report;
  report.l1 = locate(samples, Curve::l1, curves.l1, refine_tol);
  report.entropy = locate(samples, Curve::entropy, curves.entropy, refine_tol);

  const double unmatched = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < report.entropy.size(); ++k) {
    if (auto hit = nearest_same_kind(report.entropy[k], report.l1)) {
      report.pairs.push_back({k, hit->first, hit->second});
      report.max_gap = std::max(report.max_gap, hit->second);
    } else {
      report.max_gap = unmatched;
    }
  }
  for (const auto& e : report.l1) {
    const auto hit = nearest_same_kind(e, report.entropy);
    report.max_gap = std::max(report.max_gap, hit ? hit->second : unmatched);
  }
  return report;
}

}  // namespace parabraid
