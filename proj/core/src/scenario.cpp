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
#include "fermispin/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fermispin/errors.hpp"

namespace fermispin {

using nlohmann::json;

namespace {

constexpr std::array kKinds{
    std::pair{ScenarioKind::line, std::string_view("line")},
    std::pair{ScenarioKind::isosceles, std::string_view("isosceles")},
    std::pair{ScenarioKind::simplex, std::string_view("simplex")},
    std::pair{ScenarioKind::entropy, std::string_view("entropy")},
    std::pair{ScenarioKind::custom, std::string_view("custom")},
};

constexpr std::array kOutputs{
    std::pair{Output::negativity, std::string_view("negativity")},
    std::pair{Output::entropy, std::string_view("entropy")},
    std::pair{Output::weights, std::string_view("weights")},
    std::pair{Output::residual, std::string_view("residual")},
    std::pair{Output::witnesses, std::string_view("witnesses")},
};

int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/// Line of the first occurrence of "key" in the document; 0 if absent.
int line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

class Reader {
  public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string &field, const std::string &message) const {
        const auto top = field.substr(0, field.find_first_of(".["));
        throw SpecError(field, message, line_of_key(text_, top));
    }

    double number(const json &value, const std::string &field) const {
        if (!value.is_number()) {
            fail(field, "expected a number");
        }
        const double v = value.get<double>();
        if (!std::isfinite(v)) {
            fail(field, "must be finite");
        }
        return v;
    }

    std::uint64_t count(const json &value, const std::string &field) const {
        if (!value.is_number_integer() ||
            (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
            fail(field, "expected a non-negative integer");
        }
        return value.get<std::uint64_t>();
    }

  private:
    std::string_view text_;
};

} // namespace

std::vector<double> Grid::values() const {
    std::vector<double> out(points);
    if (points == 0) {
        return out;
    }
    if (points == 1) {
        out[0] = start;
        return out;
    }
    const double span = stop - start;
    const double last = static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        out[k] = start + span * (static_cast<double>(k) / last);
    }
    out.back() = stop;
    return out;
}

std::string_view to_string(ScenarioKind kind) noexcept {
    for (const auto &[k, name] : kKinds) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::string_view to_string(Output output) noexcept {
    for (const auto &[o, name] : kOutputs) {
        if (o == output) {
            return name;
        }
    }
    return "?";
}

ScenarioSpec parse_scenario(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        throw SpecError("", std::string("malformed JSON: ") + e.what(),
                        line_of_offset(json_text, e.byte > 0 ? e.byte - 1 : 0));
    }
    const Reader reader(json_text);
    if (!doc.is_object()) {
        reader.fail("", "scenario must be a JSON object");
    }
    static const std::set<std::string> known{"kind", "n", "grid", "x_max", "base",
                                             "positions", "seed", "outputs"};
    for (const auto &[key, value] : doc.items()) {
        if (!known.contains(key)) {
            reader.fail(key, "unknown field");
        }
    }

    ScenarioSpec spec;
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        reader.fail("kind", "required string field");
    }
    {
        const auto name = doc["kind"].get<std::string>();
        const auto it = std::find_if(kKinds.begin(), kKinds.end(),
                                     [&](const auto &p) { return p.second == name; });
        if (it == kKinds.end()) {
            reader.fail("kind", "unknown kind '" + name +
                                    "' (expected line, isosceles, simplex, entropy or custom)");
        }
        spec.kind = it->first;
    }
    if (doc.contains("n")) {
        spec.n = static_cast<std::size_t>(reader.count(doc["n"], "n"));
        if (spec.n == 0) {
            reader.fail("n", "must be at least 2");
        }
    }
    if (doc.contains("grid")) {
        const auto &g = doc["grid"];
        if (!g.is_object()) {
            reader.fail("grid", "expected an object with start, stop, points");
        }
        for (const auto &[key, value] : g.items()) {
            if (key != "start" && key != "stop" && key != "points") {
                reader.fail("grid." + key, "unknown field");
            }
        }
        for (const char *key : {"start", "stop", "points"}) {
            if (!g.contains(key)) {
                reader.fail(std::string("grid.") + key, "required field");
            }
        }
        spec.grid = Grid{reader.number(g["start"], "grid.start"), reader.number(g["stop"], "grid.stop"),
                         static_cast<std::size_t>(reader.count(g["points"], "grid.points"))};
    }
    if (doc.contains("x_max")) {
        spec.x_max = reader.number(doc["x_max"], "x_max");
    }
    if (doc.contains("base")) {
        spec.base = reader.number(doc["base"], "base");
    }
    if (doc.contains("positions")) {
        const auto &p = doc["positions"];
        if (!p.is_array()) {
            reader.fail("positions", "expected an array of [x, y, z] triples");
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            const std::string field = "positions[" + std::to_string(i) + "]";
            if (!p[i].is_array() || p[i].size() != 3) {
                reader.fail(field, "expected an [x, y, z] triple");
            }
            spec.positions.emplace_back(reader.number(p[i][0], field + "[0]"),
                                        reader.number(p[i][1], field + "[1]"),
                                        reader.number(p[i][2], field + "[2]"));
        }
    }
    if (doc.contains("seed")) {
        spec.seed = reader.count(doc["seed"], "seed");
    }
    if (doc.contains("outputs")) {
        const auto &o = doc["outputs"];
        if (!o.is_array()) {
            reader.fail("outputs", "expected an array of output names");
        }
        for (std::size_t i = 0; i < o.size(); ++i) {
            const std::string field = "outputs[" + std::to_string(i) + "]";
            if (!o[i].is_string()) {
                reader.fail(field, "expected a string");
            }
            const auto name = o[i].get<std::string>();
            const auto it = std::find_if(kOutputs.begin(), kOutputs.end(),
                                         [&](const auto &q) { return q.second == name; });
            if (it == kOutputs.end()) {
                reader.fail(field, "unknown output '" + name + "'");
            }
            spec.outputs.push_back(it->first);
        }
        if (spec.outputs.empty()) {
            reader.fail("outputs", "must name at least one output");
        }
    }

    try {
        validate(spec);
    } catch (const SpecError &e) {
        const auto top = e.field().substr(0, e.field().find_first_of(".["));
        throw SpecError(e.field(), e.message(), line_of_key(json_text, top));
    }
    return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecError("", "cannot open scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

void validate(ScenarioSpec &spec) {
    auto fail = [](const std::string &field, const std::string &message) {
        throw SpecError(field, message);
    };

    if (spec.grid) {
        const Grid &g = *spec.grid;
        if (g.points < 2) {
            fail("grid.points", "grid must have at least 2 points");
        }
        if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !(g.stop > g.start)) {
            fail("grid", "grid must be strictly increasing (start < stop)");
        }
        if (g.start < 0.0) {
            fail("grid.start", "grid values are distances or scale factors and must be >= 0");
        }
    } else if (spec.kind != ScenarioKind::custom || spec.positions.empty()) {
        fail("grid", "required field");
    }

    switch (spec.kind) {
    case ScenarioKind::line:
        if (spec.n != 0 && spec.n != 3) {
            fail("n", "line scenarios have exactly 3 fermions");
        }
        spec.n = 3;
        if (!(spec.x_max > 0.0)) {
            fail("x_max", "must be positive");
        }
        if (spec.grid->stop > spec.x_max) {
            fail("grid.stop", "line positions must lie in [0, x_max]");
        }
        break;
    case ScenarioKind::isosceles:
        if (spec.n != 0 && spec.n != 3) {
            fail("n", "isosceles scenarios have exactly 3 fermions");
        }
        spec.n = 3;
        if (!(spec.base > 0.0)) {
            fail("base", "must be positive");
        }
        break;
    case ScenarioKind::simplex:
    case ScenarioKind::entropy:
        if (spec.n < 2 || spec.n > 4) {
            fail("n", "regular simplex scenarios need n in {2, 3, 4}");
        }
        break;
    case ScenarioKind::custom:
        if (!spec.positions.empty()) {
            if (spec.positions.size() < Configuration::kMinParticles ||
                spec.positions.size() > Configuration::kMaxParticles) {
                fail("positions", "need between 2 and 8 positions");
            }
            if (spec.n != 0 && spec.n != spec.positions.size()) {
                fail("n", "does not match the number of positions");
            }
            spec.n = spec.positions.size();
        } else {
            if (spec.n < Configuration::kMinParticles || spec.n > Configuration::kMaxParticles) {
                fail("n", "random custom scenarios need n in [2, 8]");
            }
            if (!(spec.grid->start > 0.0)) {
                fail("grid.start", "random box sizes must be positive");
            }
        }
        break;
    }

    if (spec.outputs.empty()) {
        spec.outputs.push_back(spec.kind == ScenarioKind::entropy ? Output::entropy
                                                                  : Output::negativity);
    }
    std::vector<Output> unique;
    for (auto o : spec.outputs) {
        if (std::find(unique.begin(), unique.end(), o) == unique.end()) {
            unique.push_back(o);
        }
    }
    spec.outputs = std::move(unique);
    if (std::find(spec.outputs.begin(), spec.outputs.end(), Output::witnesses) != spec.outputs.end() &&
        spec.n != 3) {
        fail("outputs", "witnesses are defined for three fermions only");
    }
}

std::string to_json(const ScenarioSpec &spec) {
    json doc;
    doc["kind"] = std::string(to_string(spec.kind));
    doc["n"] = spec.n;
    if (spec.grid) {
        doc["grid"] = {{"start", spec.grid->start}, {"stop", spec.grid->stop}, {"points", spec.grid->points}};
    }
    if (spec.kind == ScenarioKind::line) {
        doc["x_max"] = spec.x_max;
    }
    if (spec.kind == ScenarioKind::isosceles) {
        doc["base"] = spec.base;
    }
    if (!spec.positions.empty()) {
        json positions = json::array();
        for (const auto &p : spec.positions) {
            positions.push_back({p.x(), p.y(), p.z()});
        }
        doc["positions"] = std::move(positions);
    }
    doc["seed"] = spec.seed;
    json outputs = json::array();
    for (auto o : spec.outputs) {
        outputs.push_back(std::string(to_string(o)));
    }
    doc["outputs"] = std::move(outputs);
    return doc.dump();
}

Configuration scenario_configuration(const ScenarioSpec &spec, double grid_value) {
    switch (spec.kind) {
    case ScenarioKind::line:
        return line_configuration(ScaledDistance(spec.x_max), ScaledDistance(grid_value));
    case ScenarioKind::isosceles:
        return isosceles_configuration(ScaledDistance(spec.base), ScaledDistance(grid_value));
    case ScenarioKind::simplex:
    case ScenarioKind::entropy:
        return regular_simplex_configuration(spec.n, ScaledDistance(grid_value));
    case ScenarioKind::custom:
        if (spec.positions.empty()) {
            return random_configuration(spec.n, ScaledDistance(grid_value), spec.seed);
        }
        return Configuration(spec.positions).scaled(grid_value);
    }
    throw InvalidArgument("unknown scenario kind");
}

} // namespace fermispin
