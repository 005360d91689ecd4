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
#include "fermispin/pair_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fermispin/errors.hpp"

namespace fermispin {

namespace {

constexpr double kClosedFormDenominatorFloor = 1e-12;
constexpr double kGramConditionFloor = 1e-12;

std::size_t pair_slot(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    if (i == j || j >= n) {
        throw InvalidArgument("pair labels must be distinct and below " + std::to_string(n));
    }
    // pairs before row i: sum_{k<i} (n - 1 - k)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::string pair_name(const SpinPair &p) {
    return "S_" + std::to_string(p.first + 1) + std::to_string(p.second + 1);
}

} // namespace

std::vector<SpinPair> spin_pairs(std::size_t num_spins) {
    std::vector<SpinPair> out;
    for (std::size_t i = 0; i < num_spins; ++i) {
        for (std::size_t j = i + 1; j < num_spins; ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

PairWeights::PairWeights(std::size_t num_spins, std::vector<double> singlet,
                         std::optional<double> residual)
    : num_spins_(num_spins), singlet_(std::move(singlet)), residual_(residual) {
    if (num_spins_ < 2 || num_spins_ > kMaxSpins) {
        throw InvalidArgument("pair weights need 2 to 8 spins");
    }
    if (singlet_.size() != num_spins_ * (num_spins_ - 1) / 2) {
        throw InvalidArgument("pair weights need one entry per pair");
    }
}

double PairWeights::weight(std::size_t i, std::size_t j) const {
    return singlet_[pair_slot(num_spins_, i, j)];
}

double PairWeights::background() const noexcept {
    return 1.0 - std::accumulate(singlet_.begin(), singlet_.end(), 0.0);
}

bool PairWeights::is_physical(double tol) const noexcept {
    auto ok = [tol](double w) { return w >= -tol && w <= 1.0 + tol; };
    return ok(background()) && std::all_of(singlet_.begin(), singlet_.end(), ok);
}

SpinDensityMatrix singlet_component(std::size_t num_spins, std::size_t i, std::size_t j) {
    if (num_spins < 2 || num_spins > kMaxSpins) {
        throw InvalidArgument("singlet component needs 2 to 8 spins");
    }
    (void)pair_slot(num_spins, i, j);
    const std::size_t mi = spin_mask(num_spins, i);
    const std::size_t mj = spin_mask(num_spins, j);
    const std::size_t pair = mi | mj;
    const std::size_t d = std::size_t{1} << num_spins;
    const double scale = 1.0 / static_cast<double>(d / 4);
    const SpinOperator singlet = singlet_projector();
    auto local = [&](std::size_t s) {
        return ((s & mi) ? 2U : 0U) | ((s & mj) ? 1U : 0U);
    };
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
            if ((s & ~pair) != (t & ~pair)) {
                continue;
            }
            m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) =
                scale * singlet(local(s), local(t));
        }
    }
    return SpinDensityMatrix(SpinOperator(num_spins, std::move(m)));
}

PairWeights closed_form_weights(const ExchangeMatrix &exchange) {
    const std::size_t n = exchange.size();
    if (n == 2) {
        const double f2 = exchange(0, 1) * exchange(0, 1);
        return PairWeights(2, {f2 / (2.0 - f2)});
    }
    if (n != 3) {
        throw InvalidArgument("closed-form pair weights exist only for 2 or 3 fermions");
    }
    const double f01 = exchange(0, 1);
    const double f02 = exchange(0, 2);
    const double f12 = exchange(1, 2);
    const double triple = f01 * f02 * f12;
    const double denominator = -2.0 + f01 * f01 + f02 * f02 + f12 * f12 - triple;
    if (std::abs(denominator) < kClosedFormDenominatorFloor) {
        throw DegenerateConfiguration("three-fermion pair weights are indeterminate (0/0)");
    }
    auto weight = [&](double f) { return (-f * f + triple) / denominator; };
    return PairWeights(3, {weight(f01), weight(f02), weight(f12)});
}

PairWeights fit_weights(const SpinDensityMatrix &rho) {
    const std::size_t n = rho.num_spins();
    if (n < 2) {
        throw InvalidArgument("pair fit needs at least two spins");
    }
    const auto pairs = spin_pairs(n);
    const auto d = static_cast<Eigen::Index>(rho.dim());
    const Matrix background = Matrix::Identity(d, d) / static_cast<double>(d);

    std::vector<Matrix> directions;
    directions.reserve(pairs.size());
    for (const auto &p : pairs) {
        directions.push_back(singlet_component(n, p.first, p.second).matrix() - background);
    }
    const auto k = static_cast<Eigen::Index>(pairs.size());
    Matrix gram(k, k);
    Eigen::VectorXd rhs(k);
    const Matrix target = rho.matrix() - background;
    for (Eigen::Index a = 0; a < k; ++a) {
        const auto ua = static_cast<std::size_t>(a);
        rhs(a) = directions[ua].cwiseProduct(target).sum();
        for (Eigen::Index b = a; b < k; ++b) {
            gram(a, b) = gram(b, a) =
                directions[ua].cwiseProduct(directions[static_cast<std::size_t>(b)]).sum();
        }
    }

    Eigen::SelfAdjointEigenSolver<Matrix> gram_eigen(gram);
    const Eigen::VectorXd &gev = gram_eigen.eigenvalues();
    if (gev(0) < kGramConditionFloor * gev(k - 1)) {
        std::vector<std::string> dependent;
        const Eigen::VectorXd null_direction = gram_eigen.eigenvectors().col(0);
        for (Eigen::Index a = 0; a < k; ++a) {
            if (std::abs(null_direction(a)) > 1e-3) {
                dependent.push_back(pair_name(pairs[static_cast<std::size_t>(a)]));
            }
        }
        throw SingularGram("pair-singlet Gram matrix is numerically singular", std::move(dependent));
    }
    const Eigen::VectorXd solution = gram.ldlt().solve(rhs);

    Matrix reconstruction = background;
    for (Eigen::Index a = 0; a < k; ++a) {
        reconstruction += solution(a) * directions[static_cast<std::size_t>(a)];
    }
    const double residual = (rho.matrix() - reconstruction).norm();
    return PairWeights(n, std::vector<double>(solution.data(), solution.data() + k), residual);
}

SpinDensityMatrix reconstruct(const PairWeights &weights) {
    const std::size_t n = weights.num_spins();
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix m = Matrix::Identity(d, d) * (weights.background() / static_cast<double>(d));
    const auto pairs = spin_pairs(n);
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        m += weights.singlet()[a] * singlet_component(n, pairs[a].first, pairs[a].second).matrix();
    }
    return SpinDensityMatrix(SpinOperator(n, std::move(m)));
}

} // namespace fermispin
