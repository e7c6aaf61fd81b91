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

#include <cmath>
#include <numbers>
#include <utility>

namespace parabraid {

/// Golden-section search for a maximum of a unimodal f on [lo, hi]; stops
/// once the bracket is narrower than tol and returns its midpoint.
///
/// On a smooth peak the comparisons stop being informative once
/// |x - x*| ~ sqrt(eps), so results are accurate to ~1e-8 in double no
/// matter how small tol is. Follow with parabolic_polish for more.
template <typename Real, typename F>
Real golden_section_maximize(F&& f, Real lo, Real hi, Real tol) {
  const Real g = Real(1) / std::numbers::phi_v<Real>;
  Real c = hi - g * (hi - lo);
  Real d = lo + g * (hi - lo);
  Real fc = f(c);
  Real fd = f(d);
  for (int iter = 0; iter < 500 && hi - lo > tol; ++iter) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = f(d);
    }
  }
  return (lo + hi) / Real(2);
}

/// One vertex step of the parabola through (x-h, x, x+h). The vertex
/// estimate depends on differences of f over a width-h stencil, so rounding
/// error scales like eps / h instead of sqrt(eps). Returns x when the
/// stencil has no curvature.
template <typename Real, typename F>
Real parabolic_step(F&& f, Real x, Real h) {
  const Real fm = f(x - h);
  const Real f0 = f(x);
  const Real fp = f(x + h);
  const Real curvature = fm - Real(2) * f0 + fp;
  if (curvature == Real(0) || !std::isfinite(curvature)) return x;
  return x + h * (fm - fp) / (Real(2) * curvature);
}

/// Golden-section to tol, then parabolic steps with h = 1e-4, 1e-5, 1e-5.
/// A step is discarded if it leaves [lo, hi].
template <typename Real, typename F>
Real refine_maximum(F&& f, Real lo, Real hi, Real tol) {
  Real x = golden_section_maximize(f, lo, hi, tol);
  for (Real h : {Real(1e-4), Real(1e-5), Real(1e-5)}) {
    if (x - h < lo || x + h > hi) continue;
    const Real next = parabolic_step(f, x, h);
    if (next >= lo && next <= hi && std::abs(next - x) < h) x = next;
  }
  return x;
}

}  // namespace parabraid
