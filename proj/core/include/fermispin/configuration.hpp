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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fermispin/exchange.hpp"

namespace fermispin {

/// Point in dimensionless coordinates (units of 1/k_F).
using Position = Eigen::Vector3d;

/// Ordered positions of n fermions. Fermion labels follow list order
/// (0-based in the API; 1-based in CSV column names). Spins are not part
/// of the configuration.
class Configuration {
  public:
    static constexpr std::size_t kMinParticles = 2;
    static constexpr std::size_t kMaxParticles = 8;

    /// Throws InvalidArgument unless 2 <= n <= 8 and every coordinate is finite.
    explicit Configuration(std::vector<Position> positions);

    [[nodiscard]] std::size_t size() const noexcept { return positions_.size(); }
    [[nodiscard]] const std::vector<Position> &positions() const noexcept { return positions_; }
    [[nodiscard]] const Position &position(std::size_t i) const { return positions_.at(i); }
    [[nodiscard]] double distance(std::size_t i, std::size_t j) const;

    /// Fermion k of the result is fermion order[k] of this configuration.
    [[nodiscard]] Configuration relabeled(std::span<const std::size_t> order) const;
    /// Every coordinate multiplied by `factor`.
    [[nodiscard]] Configuration scaled(double factor) const;

  private:
    std::vector<Position> positions_;
};

/// Symmetric n x n matrix of pairwise kernel values with unit diagonal.
class ExchangeMatrix {
  public:
    /// Validates symmetry, unit diagonal and |F_ij| <= 1; throws InvalidArgument.
    explicit ExchangeMatrix(Eigen::MatrixXd values);

    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(values_.rows());
    }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
        return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    [[nodiscard]] const Eigen::MatrixXd &values() const noexcept { return values_; }

  private:
    Eigen::MatrixXd values_;
};

[[nodiscard]] ExchangeMatrix exchange_matrix(const Configuration &config);

/// Three collinear fermions: 0 at the origin, 2 at distance x_max, 1 at
/// distance x from fermion 0 on the segment between them.
[[nodiscard]] Configuration line_configuration(ScaledDistance x_max, ScaledDistance x);

/// Fermions 1 and 2 at (-base/2, 0, 0) and (base/2, 0, 0); fermion 0 at
/// (0, height, 0) above the midpoint of the base.
[[nodiscard]] Configuration isosceles_configuration(ScaledDistance base, ScaledDistance height);

/// n in {2, 3, 4} fermions with all pairwise distances equal to `edge`
/// (segment, equilateral triangle, regular tetrahedron).
[[nodiscard]] Configuration regular_simplex_configuration(std::size_t n, ScaledDistance edge);

/// n points uniform in [0, box]^3. Deterministic for a given seed on every
/// platform (mt19937_64 with an explicit 53-bit mantissa mapping).
[[nodiscard]] Configuration random_configuration(std::size_t n, ScaledDistance box,
                                                 std::uint64_t seed);

} // namespace fermispin
