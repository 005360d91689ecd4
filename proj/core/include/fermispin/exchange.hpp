// Copyright 2026 The fermispin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/// Zero-temperature exchange kernel of the ideal three-dimensional Fermi gas.
///
/// All lengths are dimensionless, x = k_F * r. The kernel is
///
///     f(x) = 3 j1(x) / x = 3 (sin x - x cos x) / x^3,
///
/// normalized so that f(0) = 1. It decays as 1/x^2 with oscillating sign.

#include <cmath>

namespace fermispin {

/// Non-negative, finite separation in units of 1/k_F.
class ScaledDistance {
  public:
    constexpr ScaledDistance() noexcept = default;

    /// Throws InvalidArgument for negative or non-finite input.
    explicit ScaledDistance(double x);

    [[nodiscard]] constexpr double value() const noexcept { return x_; }

    friend constexpr auto operator<=>(ScaledDistance, ScaledDistance) = default;

  private:
    double x_ = 0.0;
};

/// Below this separation the kernel is summed from its Taylor series.
inline constexpr double kExchangeSeriesCutoff = 0.5;

/// Exchange kernel f(x). Satisfies f(0) = 1 and |f(x)| < 1 for x > 0.
[[nodiscard]] double exchange_function(ScaledDistance x) noexcept;

/// Smallest x* > 0 with f(x*)^2 = 1/2: pairs closer than x* have a
/// non-positive partial transpose. Located by bisection on [1, 3] until the
/// bracket is narrower than `tolerance`; the upper end of the final
/// bracket is returned, so f(x*)^2 <= 1/2 holds at the result. Throws InvalidArgument for a
/// non-positive tolerance and Error if the bracket holds no sign change.
[[nodiscard]] ScaledDistance pair_entanglement_threshold(double tolerance = 1e-12);

namespace detail {
// Both branches are exposed for cross-checking in tests.
[[nodiscard]] double exchange_series(double x) noexcept;
[[nodiscard]] double exchange_closed_form(double x) noexcept;
} // namespace detail

} // namespace fermispin
