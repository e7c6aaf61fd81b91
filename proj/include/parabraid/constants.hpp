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

#include <complex>
#include <numbers>

namespace parabraid {

// Stored to full precision; never rebuilt from trig calls so identity
// residuals stay at rounding scale.
template <typename Scalar = double>
inline constexpr std::complex<Scalar> kOmega{Scalar(-0.5), std::numbers::sqrt3_v<Scalar> / 2};

template <typename Scalar = double>
inline constexpr std::complex<Scalar> kOmega2{Scalar(-0.5), -std::numbers::sqrt3_v<Scalar> / 2};

/// e^{-i pi/6}
template <typename Scalar = double>
inline constexpr std::complex<Scalar> kPhaseMinusPi6{std::numbers::sqrt3_v<Scalar> / 2, Scalar(-0.5)};

/// e^{i pi/3}
template <typename Scalar = double>
inline constexpr std::complex<Scalar> kPhasePi3{Scalar(0.5), std::numbers::sqrt3_v<Scalar> / 2};

/// Loop value of the Temperley-Lieb algebra realized here.
template <typename Scalar = double>
inline constexpr Scalar kQuantumDimension = std::numbers::sqrt3_v<Scalar>;

template <typename Scalar = double>
inline constexpr Scalar kInvSqrt3 = std::numbers::inv_sqrt3_v<Scalar>;

template <typename Scalar = double>
inline constexpr std::complex<Scalar> kI{Scalar(0), Scalar(1)};

/// omega^k for any integer k, from the stored constants.
template <typename Scalar = double>
constexpr std::complex<Scalar> omega_power(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return {Scalar(1), Scalar(0)};
    case 1:
      return kOmega<Scalar>;
    default:
      return kOmega2<Scalar>;
  }
}

}  // namespace parabraid
