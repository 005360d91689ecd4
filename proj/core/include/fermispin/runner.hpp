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

/// Parameter sweeps over fermion geometries and the four standard figure
/// datasets.
///
/// Rows are evaluated in parallel and stored in grid order; every row is a
/// pure function of its grid value, so results do not depend on the thread
/// count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermispin/scenario.hpp"

namespace fermispin {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct SweepRow {
    double x = 0.0;
    /// One entry per SweepResult::columns; empty where a configuration was
    /// degenerate.
    std::vector<std::optional<double>> values;
    bool degenerate = false;
};

struct SweepMetadata {
    std::string description;
    std::string parameters_json; ///< scenario echo or figure parameters
    std::string tool_version{kToolVersion};
    std::string timestamp; ///< UTC, ISO 8601
};

struct SweepResult {
    std::vector<std::string> columns; ///< excluding the leading `x` and trailing `degenerate`
    std::vector<SweepRow> rows;
    SweepMetadata metadata;
    /// Scalar results for the JSON report, in insertion order.
    std::vector<std::pair<std::string, double>> scalars;

    [[nodiscard]] bool all_degenerate() const noexcept;
    /// Values of a named column; throws InvalidArgument for unknown names.
    [[nodiscard]] std::vector<std::optional<double>> column(std::string_view name) const;
    [[nodiscard]] std::optional<double> scalar(std::string_view name) const;
};

struct RunOptions {
    unsigned threads = 0; ///< 0 selects std::thread::hardware_concurrency()
};

/// Column names for a validated scenario, in emission order:
/// negativity -> N_<A>_<B> for canonical_bipartitions; entropy -> S<n>_bits,
/// S<n>_nats; weights -> w0, w_<ij>...; residual -> residual; witnesses ->
/// W_GHZ, W_W3.
[[nodiscard]] std::vector<std::string> scenario_columns(const ScenarioSpec &spec);

[[nodiscard]] SweepResult run_scenario(const ScenarioSpec &spec, const RunOptions &options = {});

struct FigureOverrides {
    std::optional<std::size_t> grid_points;
    std::optional<double> base;  ///< figure 2
    std::optional<double> x_max; ///< figure 1
    std::optional<double> eps;   ///< figures 3 and 4: first edge value
    std::optional<double> stop;  ///< last grid value (figures 2, 3, 4)
};

/// Defaults: figure 1 x in [0, 5], 101 points; figure 2 base 1, height in
/// [0, 8], 81 points; figures 3 and 4 edge in [1e-2, 6], 121 points.
struct FigureDefaults {
    static constexpr std::size_t line_points = 101;
    static constexpr double line_x_max = 5.0;
    static constexpr std::size_t isosceles_points = 81;
    static constexpr double isosceles_base = 1.0;
    static constexpr double isosceles_height = 8.0;
    static constexpr std::size_t simplex_points = 121;
    static constexpr double simplex_eps = 1e-2;
    static constexpr double simplex_stop = 6.0;
};

/// Figure 1: N_2_13 along the line. Figure 2: N_1_23, N_2_13 vs apex height.
/// Figure 3: N_1_2, N_1_23, N_1_234 vs simplex edge. Figure 4: S2, S3, S4
/// (bits and nats) vs simplex edge. Throws InvalidArgument for other ids or
/// inconsistent overrides.
[[nodiscard]] SweepResult run_figure(int id, const FigureOverrides &overrides = {},
                                     const RunOptions &options = {});

/// Pair-singlet fit quality over random geometries.
struct PairFormSurvey {
    std::size_t num_spins = 0;
    std::size_t samples = 0;
    std::size_t degenerate = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    /// Largest |fit - closed form| weight difference; three spins only.
    std::optional<double> max_closed_form_deviation;
};

[[nodiscard]] PairFormSurvey survey_pair_form(std::size_t num_spins, std::size_t samples,
                                              double box, std::uint64_t seed);

} // namespace fermispin
