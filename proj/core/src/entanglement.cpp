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
#include "fermispin/entanglement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "fermispin/errors.hpp"

namespace fermispin {

double negativity(const SpinDensityMatrix &rho, const Bipartition &part) {
    const double n = 0.5 * (trace_norm(partial_transpose(rho.op(), part)) - 1.0);
    return n < kNegativityClamp ? 0.0 : n;
}

std::vector<double> negative_partial_transpose_eigenvalues(const SpinDensityMatrix &rho,
                                                           const Bipartition &part) {
    const Eigen::VectorXd values = spectrum(partial_transpose(rho.op(), part));
    std::vector<double> out;
    for (double v : values) {
        if (v < -kNegativityClamp) {
            out.push_back(v);
        }
    }
    return out;
}

double two_fermion_negativity(ScaledDistance x) {
    const double f = exchange_function(x);
    const double f2 = f * f;
    return std::max(0.0, (2.0 * f2 - 1.0) / (2.0 * (2.0 - f2)));
}

SpinOperator witness_operator(Witness kind) {
    Eigen::VectorXd state = Eigen::VectorXd::Zero(8);
    double offset = 0.0;
    switch (kind) {
    case Witness::ghz:
        state(0b000) = state(0b111) = 1.0 / std::numbers::sqrt2;
        offset = 0.5;
        break;
    case Witness::w3:
        state(0b010) = state(0b100) = state(0b001) = 1.0 / std::sqrt(3.0);
        offset = 2.0 / 3.0;
        break;
    }
    Matrix m = offset * Matrix::Identity(8, 8) - state * state.transpose();
    return SpinOperator(3, std::move(m));
}

double witness_expectation(const SpinDensityMatrix &rho, Witness kind) {
    if (rho.num_spins() != 3) {
        throw InvalidArgument("tripartite witnesses need a three-spin state");
    }
    return rho.matrix().cwiseProduct(witness_operator(kind).matrix()).sum();
}

double coincident_entropy_bound(std::size_t n, LogBase base) {
    if (n < 2 || n > 62) {
        throw InvalidArgument("coincident entropy bound needs n >= 2");
    }
    const double states = std::ldexp(1.0, static_cast<int>(n)) - static_cast<double>(n + 1);
    return base == LogBase::bits ? std::log2(states) : std::log(states);
}

std::vector<Bipartition> canonical_bipartitions(std::size_t num_spins) {
    if (num_spins < 2 || num_spins > kMaxSpins) {
        throw InvalidArgument("bipartitions need 2 to 8 spins");
    }
    std::vector<std::vector<std::size_t>> subsets;
    const std::uint32_t all = (std::uint32_t{1} << num_spins) - 1U;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (2 * size > num_spins || (2 * size == num_spins && (mask & 1U) == 0U)) {
            continue;
        }
        std::vector<std::size_t> labels;
        for (std::size_t k = 0; k < num_spins; ++k) {
            if (mask & (std::uint32_t{1} << k)) {
                labels.push_back(k);
            }
        }
        subsets.push_back(std::move(labels));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Bipartition> out;
    out.reserve(subsets.size());
    for (const auto &s : subsets) {
        out.emplace_back(num_spins, s);
    }
    return out;
}

EntanglementReport analyze(const SpinDensityMatrix &rho) {
    EntanglementReport report{rho.num_spins(), {}, std::nullopt, std::nullopt, 0.0, 0.0};
    for (const auto &part : canonical_bipartitions(rho.num_spins())) {
        const double neg = negativity(rho, part);
        report.bipartitions.push_back(BipartitionReport{
            part, neg, neg == 0.0,
            neg == 0.0 ? std::vector<double>{} : negative_partial_transpose_eigenvalues(rho, part)});
    }
    if (rho.num_spins() == 3) {
        report.witness_ghz = witness_expectation(rho, Witness::ghz);
        report.witness_w3 = witness_expectation(rho, Witness::w3);
    }
    report.entropy_nats = von_neumann_entropy(rho, LogBase::nats);
    report.entropy_bits = report.entropy_nats / std::numbers::ln2;
    return report;
}

} // namespace fermispin
