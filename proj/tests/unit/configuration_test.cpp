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
#include <numbers>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fermispin/errors.hpp"
#include "oracles.hpp"

namespace fermispin {
namespace {

TEST(Configuration, EnforcesParticleCountAndFiniteness) {
    EXPECT_THROW(Configuration({Position::Zero()}), InvalidArgument);
    EXPECT_THROW(Configuration(std::vector<Position>(9, Position::Zero())), InvalidArgument);
    EXPECT_THROW(Configuration({Position::Zero(), Position(NAN, 0, 0)}), InvalidArgument);
    EXPECT_NO_THROW(Configuration(std::vector<Position>(8, Position::Zero())));
}

TEST(ExchangeMatrix, CoincidentPairIsAllOnes) {
    const auto f = exchange_matrix(Configuration({Position::Zero(), Position::Zero()}));
    EXPECT_EQ(f.values(), Eigen::MatrixXd::Ones(2, 2));
}

TEST(ExchangeMatrix, DistantPairDecouples) {
    const auto f = exchange_matrix(Configuration({Position::Zero(), Position(500, 0, 0)}));
    EXPECT_LT(std::abs(f(0, 1)), 1e-4);
}

TEST(ExchangeMatrix, EquilateralAtPiHasEqualOffDiagonals) {
    const auto f = exchange_matrix(regular_simplex_configuration(3, ScaledDistance(std::numbers::pi)));
    const double expected = oracle::kernel(std::numbers::pi);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(f(i, i), 1.0);
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j) {
                EXPECT_NEAR(f(i, j), expected, 1e-14);
            }
        }
    }
}

TEST(ExchangeMatrix, ValidatesRawInput) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
    m(0, 1) = 0.3;
    EXPECT_THROW(ExchangeMatrix{m}, InvalidArgument); // asymmetric
    m(1, 0) = 0.3;
    EXPECT_NO_THROW(ExchangeMatrix{m});
    m(0, 1) = m(1, 0) = 1.5;
    EXPECT_THROW(ExchangeMatrix{m}, InvalidArgument);
    m = Eigen::MatrixXd::Ones(2, 2) * 0.5;
    EXPECT_THROW(ExchangeMatrix{m}, InvalidArgument); // diagonal
}

TEST(ExchangeMatrix, InvariantUnderRigidMotion) {
    std::mt19937_64 engine(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto config = random_configuration(2 + trial % 7, ScaledDistance(6.0), 1000 + trial);
        const Eigen::Matrix3d rotation = oracle::random_rotation(engine);
        const Position shift(engine() % 100 / 7.0, -3.5, 12.25);
        std::vector<Position> moved;
        for (const auto &p : config.positions()) {
            moved.emplace_back(rotation * p + shift);
        }
        const auto a = exchange_matrix(config).values();
        const auto b = exchange_matrix(Configuration(moved)).values();
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(ExchangeMatrix, RelabelingPermutesRowsAndColumns) {
    std::mt19937_64 engine(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto config = random_configuration(n, ScaledDistance(4.0), trial);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), engine);
        const auto f = exchange_matrix(config);
        const auto g = exchange_matrix(config.relabeled(order));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_EQ(g(i, j), f(order[i], order[j]));
            }
        }
    }
}

TEST(LineConfiguration, PlacesMiddleFermion) {
    const auto start = line_configuration(ScaledDistance(5), ScaledDistance(0));
    EXPECT_EQ(start.distance(0, 1), 0.0);
    const auto mid = line_configuration(ScaledDistance(5), ScaledDistance(2.5));
    EXPECT_DOUBLE_EQ(mid.distance(0, 1), 2.5);
    EXPECT_DOUBLE_EQ(mid.distance(1, 2), 2.5);
    const auto end = line_configuration(ScaledDistance(5), ScaledDistance(5));
    EXPECT_EQ(end.distance(1, 2), 0.0);
    EXPECT_DOUBLE_EQ(end.distance(0, 2), 5.0);
    EXPECT_THROW((void)line_configuration(ScaledDistance(5), ScaledDistance(5.1)), InvalidArgument);
}

TEST(IsoscelesConfiguration, ApexAboveBaseMidpoint) {
    const auto flat = isosceles_configuration(ScaledDistance(1), ScaledDistance(0));
    EXPECT_EQ(flat.position(0), Position::Zero());
    EXPECT_DOUBLE_EQ(flat.distance(1, 2), 1.0);
    for (double h : {0.3, 1.0, 4.0}) {
        const auto c = isosceles_configuration(ScaledDistance(1), ScaledDistance(h));
        const double expected = std::sqrt(h * h + 0.25);
        EXPECT_NEAR(c.distance(0, 1), expected, 1e-15);
        EXPECT_NEAR(c.distance(0, 2), expected, 1e-15);
    }
    const auto far = exchange_matrix(isosceles_configuration(ScaledDistance(1), ScaledDistance(8)));
    EXPECT_LT(std::abs(far(0, 1)), 2e-2);
    EXPECT_LT(std::abs(far(0, 2)), 2e-2);
    EXPECT_THROW((void)isosceles_configuration(ScaledDistance(0), ScaledDistance(1)), InvalidArgument);
}

TEST(RegularSimplexConfiguration, AllEdgesEqual) {
    for (std::size_t n : {2U, 3U, 4U}) {
        for (double edge : {0.0, 1.0, 2.75}) {
            const auto c = regular_simplex_configuration(n, ScaledDistance(edge));
            ASSERT_EQ(c.size(), n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    EXPECT_NEAR(c.distance(i, j), edge, 1e-12);
                }
            }
        }
    }
    EXPECT_THROW((void)regular_simplex_configuration(5, ScaledDistance(1)), InvalidArgument);
    EXPECT_THROW((void)regular_simplex_configuration(1, ScaledDistance(1)), InvalidArgument);
}

TEST(RandomConfiguration, DeterministicPerSeed) {
    const auto a = random_configuration(5, ScaledDistance(6), 42);
    const auto b = random_configuration(5, ScaledDistance(6), 42);
    const auto c = random_configuration(5, ScaledDistance(6), 43);
    EXPECT_EQ(a.positions(), b.positions());
    EXPECT_NE(a.positions(), c.positions());
}

TEST(RandomConfiguration, StaysInsideTheBox) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto c = random_configuration(3, ScaledDistance(6), seed);
        for (const auto &p : c.positions()) {
            EXPECT_TRUE((p.array() >= 0.0).all() && (p.array() <= 6.0).all());
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                EXPECT_LE(c.distance(i, j), 6.0 * std::sqrt(3.0));
            }
        }
    }
}

TEST(RandomConfiguration, MeanPairDistanceMatchesIndependentSampler) {
    // Oracle: a separate engine and std::uniform_real_distribution.
    constexpr int draws = 10000;
    std::mt19937 other(987654321U);
    std::uniform_real_distribution<double> uniform(0.0, 6.0);
    double oracle_sum = 0.0;
    for (int k = 0; k < draws; ++k) {
        const Position a(uniform(other), uniform(other), uniform(other));
        const Position b(uniform(other), uniform(other), uniform(other));
        oracle_sum += (a - b).norm();
    }
    double sum = 0.0;
    for (int k = 0; k < draws; ++k) {
        sum += random_configuration(2, ScaledDistance(6), static_cast<std::uint64_t>(k)).distance(0, 1);
    }
    const double oracle_mean = oracle_sum / draws;
    // Known value of the unit-cube mean distance, 0.6617..., as a sanity anchor.
    EXPECT_NEAR(oracle_mean / 6.0, 0.6617, 0.02);
    EXPECT_NEAR(sum / draws, oracle_mean, 0.02 * oracle_mean);
}

} // namespace
} // namespace fermispin
