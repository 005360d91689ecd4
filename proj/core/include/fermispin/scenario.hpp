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

/// Scenario documents for the sweep runner.
///
/// A scenario is a JSON object:
///
///     {
///       "kind": "line" | "isosceles" | "simplex" | "entropy" | "custom",
///       "n": 3,                                    // particle count
///       "grid": {"start": 0, "stop": 5, "points": 101},
///       "x_max": 5.0,                              // line only
///       "base": 1.0,                               // isosceles only
///       "positions": [[0,0,0], [1,0,0]],           // custom only
///       "seed": 7,                                 // custom without positions
///       "outputs": ["negativity", "entropy", "weights", "residual", "witnesses"]
///     }
///
/// The grid value is the swept geometric parameter: the position of the
/// middle fermion (line), the apex height (isosceles), the edge (simplex,
/// entropy), or a uniform scale factor applied to `positions` (custom). A
/// custom scenario without positions draws n random points in a box whose
/// side is the grid value.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermispin/configuration.hpp"

namespace fermispin {

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    std::size_t points = 0;

    /// Evenly spaced values with exact endpoints.
    [[nodiscard]] std::vector<double> values() const;
};

enum class ScenarioKind { line, isosceles, simplex, entropy, custom };

enum class Output { negativity, entropy, weights, residual, witnesses };

[[nodiscard]] std::string_view to_string(ScenarioKind kind) noexcept;
[[nodiscard]] std::string_view to_string(Output output) noexcept;

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::custom;
    std::size_t n = 0; ///< 0 until resolved by parse/validate
    std::optional<Grid> grid;
    double x_max = 5.0;
    double base = 1.0;
    std::vector<Position> positions;
    std::uint64_t seed = 0;
    std::vector<Output> outputs;
};

/// Parses and validates; throws SpecError carrying the field path and, when
/// it can be located, the source line.
[[nodiscard]] ScenarioSpec parse_scenario(std::string_view json_text);
[[nodiscard]] ScenarioSpec load_scenario(const std::filesystem::path &path);

/// Checks every invariant of a spec built in code; fills defaulted n and
/// outputs. Throws SpecError.
void validate(ScenarioSpec &spec);

/// Canonical JSON echo of a validated spec.
[[nodiscard]] std::string to_json(const ScenarioSpec &spec);

/// Configuration of one sweep row.
[[nodiscard]] Configuration scenario_configuration(const ScenarioSpec &spec, double grid_value);

} // namespace fermispin
