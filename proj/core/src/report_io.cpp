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
#include "fermispin/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

namespace fermispin {

using nlohmann::ordered_json;

namespace {

ordered_json number_or_null(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

} // namespace

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (value == 0.0) {
        return "0"; // folds -0
    }
    std::array<char, 64> buffer{};
    const auto [end, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 15);
    return std::string(buffer.data(), ec == std::errc{} ? end : buffer.data());
}

void write_csv(std::ostream &out, const SweepResult &result) {
    out << 'x';
    for (const auto &c : result.columns) {
        out << ',' << c;
    }
    out << ",degenerate\n";
    for (const auto &row : result.rows) {
        out << format_number(row.x);
        for (const auto &v : row.values) {
            out << ',';
            if (v) {
                out << format_number(*v);
            }
        }
        out << ',' << (row.degenerate ? "true" : "false") << '\n';
    }
}

std::string report_json(const SweepResult &result) {
    ordered_json doc;
    doc["description"] = result.metadata.description;
    doc["tool_version"] = result.metadata.tool_version;
    doc["timestamp"] = result.metadata.timestamp;
    doc["parameters"] = ordered_json::parse(result.metadata.parameters_json);
    ordered_json columns = ordered_json::array({"x"});
    for (const auto &c : result.columns) {
        columns.push_back(c);
    }
    columns.push_back("degenerate");
    doc["columns"] = std::move(columns);
    doc["rows"] = result.rows.size();
    std::size_t degenerate = 0;
    for (const auto &r : result.rows) {
        degenerate += r.degenerate ? 1U : 0U;
    }
    doc["degenerate_rows"] = degenerate;
    ordered_json scalars = ordered_json::object();
    for (const auto &[key, value] : result.scalars) {
        scalars[key] = number_or_null(value);
    }
    doc["scalars"] = std::move(scalars);
    return doc.dump(2) + "\n";
}

std::string analysis_json(const Configuration &config, const EntanglementReport &report,
                          const PairWeights &fit, const std::optional<PairWeights> &closed_form) {
    ordered_json doc;
    doc["n"] = config.size();
    ordered_json positions = ordered_json::array();
    for (const auto &p : config.positions()) {
        positions.push_back({p.x(), p.y(), p.z()});
    }
    doc["positions"] = std::move(positions);
    const auto f = exchange_matrix(config);
    ordered_json exchange = ordered_json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < f.size(); ++j) {
            row.push_back(f(i, j));
        }
        exchange.push_back(std::move(row));
    }
    doc["exchange_matrix"] = std::move(exchange);

    ordered_json parts = ordered_json::array();
    for (const auto &b : report.bipartitions) {
        parts.push_back({{"bipartition", b.part.name()},
                         {"negativity", b.negativity},
                         {"ppt", b.ppt},
                         {"negative_eigenvalues", b.negative_eigenvalues}});
    }
    doc["bipartitions"] = std::move(parts);
    if (report.witness_ghz) {
        doc["witness_ghz"] = *report.witness_ghz;
        doc["witness_w3"] = *report.witness_w3;
    }
    doc["entropy_bits"] = report.entropy_bits;
    doc["entropy_nats"] = report.entropy_nats;

    auto weights_json = [&](const PairWeights &w) {
        ordered_json out;
        out["background"] = w.background();
        ordered_json singlet = ordered_json::object();
        const auto pairs = spin_pairs(w.num_spins());
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            singlet[std::to_string(pairs[a].first + 1) + std::to_string(pairs[a].second + 1)] =
                w.singlet()[a];
        }
        out["singlet"] = std::move(singlet);
        if (w.residual()) {
            out["residual"] = *w.residual();
        }
        out["physical"] = w.is_physical();
        return out;
    };
    doc["pair_weights_fit"] = weights_json(fit);
    if (closed_form) {
        doc["pair_weights_closed_form"] = weights_json(*closed_form);
    }
    return doc.dump(2) + "\n";
}

} // namespace fermispin
