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
#include "fermispin/wick.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "fermispin/errors.hpp"

namespace fermispin {

namespace {

struct PermutationTerm {
    double sign;
    int cycles;
};

PermutationTerm classify(std::span<const std::size_t> perm) {
    std::array<bool, kMaxSpins> visited{};
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (visited[i]) {
            continue;
        }
        ++cycles;
        for (std::size_t k = i; !visited[k]; k = perm[k]) {
            visited[k] = true;
        }
    }
    // sgn(P) = (-1)^(n - cycles)
    const bool odd = ((perm.size() - static_cast<std::size_t>(cycles)) & 1U) != 0U;
    return {odd ? -1.0 : 1.0, cycles};
}

/// Visits every permutation of {0..n-1} in lexicographic order.
template <class Visitor> void for_each_permutation(std::size_t n, Visitor &&visit) {
    std::array<std::size_t, kMaxSpins> perm{};
    std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
    const std::span<const std::size_t> view(perm.data(), n);
    do {
        visit(view);
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
}

double exchange_product(const ExchangeMatrix &f, std::span<const std::size_t> perm) {
    double w = 1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        w *= f(i, perm[i]);
    }
    return w;
}

} // namespace

double normalization_trace(const ExchangeMatrix &exchange) {
    double trace = 0.0;
    for_each_permutation(exchange.size(), [&](std::span<const std::size_t> perm) {
        const auto term = classify(perm);
        trace += term.sign * std::ldexp(1.0, term.cycles) * exchange_product(exchange, perm);
    });
    return trace;
}

SpinOperator unnormalized_spin_density(const ExchangeMatrix &exchange) {
    const std::size_t n = exchange.size();
    const std::size_t d = std::size_t{1} << n;
    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    std::array<std::size_t, kMaxSpins> source_mask{};
    std::array<std::size_t, kMaxSpins> target_mask{};
    for (std::size_t i = 0; i < n; ++i) {
        target_mask[i] = spin_mask(n, i);
    }
    for_each_permutation(n, [&](std::span<const std::size_t> perm) {
        const double w = classify(perm).sign * exchange_product(exchange, perm);
        if (w == 0.0) {
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            source_mask[i] = spin_mask(n, perm[i]);
        }
        // <s|Perm(P)|s'> = 1 iff s'_i = s_{P(i)}
        for (std::size_t s = 0; s < d; ++s) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (s & source_mask[i]) {
                    t |= target_mask[i];
                }
            }
            rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) += w;
        }
    });
    // P and P^-1 carry the same weight, so rho~ is symmetric up to the order
    // of the floating-point products.
    rho = 0.5 * (rho + rho.transpose()).eval();
    return SpinOperator(n, std::move(rho));
}

SpinDensityMatrix spin_density_matrix(const ExchangeMatrix &exchange) {
    SpinOperator raw = unnormalized_spin_density(exchange);
    const double trace = raw.trace();
    if (!(trace >= kDegeneracyThreshold)) {
        throw DegenerateConfiguration(
            "Wick normalization trace " + std::to_string(trace) +
                " vanishes: more than two fermions are effectively coincident",
            trace);
    }
    return SpinDensityMatrix(SpinOperator(raw.num_spins(), raw.matrix() / trace));
}

SpinDensityMatrix spin_density_matrix(const Configuration &config) {
    return spin_density_matrix(exchange_matrix(config));
}

} // namespace fermispin
