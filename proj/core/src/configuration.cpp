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
#include "fermispin/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fermispin/errors.hpp"

namespace fermispin {

Configuration::Configuration(std::vector<Position> positions) : positions_(std::move(positions)) {
    if (positions_.size() < kMinParticles || positions_.size() > kMaxParticles) {
        throw InvalidArgument("configuration needs between 2 and 8 fermions, got " +
                              std::to_string(positions_.size()));
    }
    for (const auto &p : positions_) {
        if (!p.allFinite()) {
            throw InvalidArgument("configuration coordinates must be finite");
        }
    }
}

double Configuration::distance(std::size_t i, std::size_t j) const {
    return (position(i) - position(j)).norm();
}

Configuration Configuration::relabeled(std::span<const std::size_t> order) const {
    if (order.size() != size()) {
        throw InvalidArgument("relabeling must list every fermion exactly once");
    }
    std::vector<bool> seen(size(), false);
    std::vector<Position> out;
    out.reserve(size());
    for (auto k : order) {
        if (k >= size() || seen[k]) {
            throw InvalidArgument("relabeling must list every fermion exactly once");
        }
        seen[k] = true;
        out.push_back(positions_[k]);
    }
    return Configuration(std::move(out));
}

Configuration Configuration::scaled(double factor) const {
    std::vector<Position> out = positions_;
    for (auto &p : out) {
        p *= factor;
    }
    return Configuration(std::move(out));
}

ExchangeMatrix::ExchangeMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
    const auto n = values_.rows();
    if (n != values_.cols() || n < 2 || n > static_cast<Eigen::Index>(Configuration::kMaxParticles)) {
        throw InvalidArgument("exchange matrix must be square with 2 to 8 rows");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (values_(i, i) != 1.0) {
            throw InvalidArgument("exchange matrix must have a unit diagonal");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = values_(i, j);
            if (!std::isfinite(v) || std::abs(v) > 1.0) {
                throw InvalidArgument("exchange matrix entries must lie in [-1, 1]");
            }
            if (v != values_(j, i)) {
                throw InvalidArgument("exchange matrix must be symmetric");
            }
        }
    }
}

ExchangeMatrix exchange_matrix(const Configuration &config) {
    const auto n = static_cast<Eigen::Index>(config.size());
    Eigen::MatrixXd f = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = config.distance(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            f(i, j) = f(j, i) = exchange_function(ScaledDistance(r));
        }
    }
    return ExchangeMatrix(std::move(f));
}

Configuration line_configuration(ScaledDistance x_max, ScaledDistance x) {
    if (x > x_max) {
        throw InvalidArgument("line position must lie in [0, x_max]");
    }
    return Configuration({Position::Zero(), Position(x.value(), 0.0, 0.0),
                          Position(x_max.value(), 0.0, 0.0)});
}

Configuration isosceles_configuration(ScaledDistance base, ScaledDistance height) {
    if (!(base.value() > 0.0)) {
        throw InvalidArgument("isosceles base must be positive");
    }
    const double half = 0.5 * base.value();
    return Configuration({Position(0.0, height.value(), 0.0), Position(-half, 0.0, 0.0),
                          Position(half, 0.0, 0.0)});
}

Configuration regular_simplex_configuration(std::size_t n, ScaledDistance edge) {
    const double d = edge.value();
    switch (n) {
    case 2:
        return Configuration({Position::Zero(), Position(d, 0.0, 0.0)});
    case 3:
        return Configuration({Position::Zero(), Position(d, 0.0, 0.0),
                              Position(0.5 * d, 0.5 * std::sqrt(3.0) * d, 0.0)});
    case 4: {
        // Alternate cube corners; edge = 2 sqrt(2) a.
        const double a = d / (2.0 * std::sqrt(2.0));
        return Configuration({Position(a, a, a), Position(a, -a, -a), Position(-a, a, -a),
                              Position(-a, -a, a)});
    }
    default:
        throw InvalidArgument("regular simplex supports n = 2, 3, 4; got " + std::to_string(n));
    }
}

Configuration random_configuration(std::size_t n, ScaledDistance box, std::uint64_t seed) {
    if (!(box.value() > 0.0)) {
        throw InvalidArgument("random configuration box must be positive");
    }
    std::mt19937_64 engine(seed);
    auto uniform = [&] {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53 * box.value();
    };
    std::vector<Position> points(n);
    for (auto &p : points) {
        const double x = uniform();
        const double y = uniform();
        const double z = uniform();
        p = Position(x, y, z);
    }
    return Configuration(std::move(points));
}

} // namespace fermispin
