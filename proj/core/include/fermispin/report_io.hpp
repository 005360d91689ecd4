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

#include <iosfwd>
#include <string>

#include "fermispin/entanglement.hpp"
#include "fermispin/pair_decomposition.hpp"
#include "fermispin/runner.hpp"

namespace fermispin {

/// Locale-independent decimal with up to 15 significant digits.
[[nodiscard]] std::string format_number(double value);

/// Header `x,<columns...>,degenerate`, one line per row, `\n` endings.
/// Degenerate cells are left empty.
void write_csv(std::ostream &out, const SweepResult &result);

/// Metadata, scalars and a row count as a JSON document.
[[nodiscard]] std::string report_json(const SweepResult &result);

/// Single-configuration analysis as JSON. `closed_form` is present for two
/// and three fermions.
[[nodiscard]] std::string analysis_json(const Configuration &config, const EntanglementReport &report,
                                        const PairWeights &fit,
                                        const std::optional<PairWeights> &closed_form);

} // namespace fermispin
