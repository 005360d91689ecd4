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
#include "fermispin/exchange.hpp"

#include <limits>
#include <string>

#include "fermispin/errors.hpp"

namespace fermispin {

ScaledDistance::ScaledDistance(double x) : x_(x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw InvalidArgument("scaled distance must be finite and non-negative, got " +
                              std::to_string(x));
    }
}

namespace detail {

double exchange_series(double x) noexcept {
    // f(x) = sum_m (-1)^m 6 (m + 1) x^(2m) / (2m + 3)!
    // t_{m+1} / t_m = -x^2 / (2 (m + 1) (2m + 5))
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 0; m < 40; ++m) {
        term *= -x2 / (2.0 * (m + 1) * (2.0 * m + 5.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

double exchange_closed_form(double x) noexcept {
    const double x3 = x * x * x;
    return 3.0 * (std::sin(x) - x * std::cos(x)) / x3;
}

} // namespace detail

double exchange_function(ScaledDistance x) noexcept {
    const double v = x.value();
    if (v < kExchangeSeriesCutoff) {
        return detail::exchange_series(v);
    }
    return detail::exchange_closed_form(v);
}

ScaledDistance pair_entanglement_threshold(double tolerance) {
    if (!(tolerance > 0.0)) {
        throw InvalidArgument("threshold tolerance must be positive");
    }
    auto excess = [](double x) {
        const double f = exchange_function(ScaledDistance(x));
        return f * f - 0.5;
    };
    double lo = 1.0;
    double hi = 3.0;
    double g_lo = excess(lo);
    if (g_lo * excess(hi) > 0.0) {
        throw Error("exchange kernel has no f^2 = 1/2 crossing on [1, 3]");
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break; // bracket at floating-point resolution
        }
        const double g_mid = excess(mid);
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return ScaledDistance(hi);
}

} // namespace fermispin
