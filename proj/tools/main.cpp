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
// fermispin: spin entanglement of an ideal Fermi gas.
//
//   fermispin figure <1|2|3|4> [--out DIR] [--grid N] [--base B] [--xmax X] [--eps E] [--stop S]
//   fermispin sweep --spec FILE --out DIR
//   fermispin analyze --spec FILE
//
// Exit codes: 0 success, 1 only degenerate output, 2 invalid spec or flags.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fermispin/entanglement.hpp"
#include "fermispin/errors.hpp"
#include "fermispin/pair_decomposition.hpp"
#include "fermispin/report_io.hpp"
#include "fermispin/runner.hpp"
#include "fermispin/scenario.hpp"
#include "fermispin/wick.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 1;
constexpr int kExitInvalid = 2;

int write_outputs(const fermispin::SweepResult &result, const fs::path &dir, const std::string &stem) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory " << dir << ": " << ec.message() << '\n';
        return kExitInvalid;
    }
    const fs::path csv = dir / (stem + ".csv");
    const fs::path report = dir / (stem + ".json");
    {
        std::ofstream out(csv, std::ios::binary);
        fermispin::write_csv(out, result);
        if (!out) {
            std::cerr << "error: failed writing " << csv << '\n';
            return kExitInvalid;
        }
    }
    {
        std::ofstream out(report, std::ios::binary);
        out << fermispin::report_json(result);
        if (!out) {
            std::cerr << "error: failed writing " << report << '\n';
            return kExitInvalid;
        }
    }
    std::cout << csv.string() << '\n' << report.string() << '\n';
    if (result.all_degenerate()) {
        std::cerr << "warning: every row is degenerate\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

int analyze(const fermispin::ScenarioSpec &spec) {
    const double value = spec.grid ? spec.grid->start : 1.0;
    const auto config = fermispin::scenario_configuration(spec, value);
    const auto exchange = fermispin::exchange_matrix(config);
    try {
        const auto rho = fermispin::spin_density_matrix(exchange);
        std::optional<fermispin::PairWeights> closed;
        if (config.size() <= 3) {
            closed = fermispin::closed_form_weights(exchange);
        }
        std::cout << fermispin::analysis_json(config, fermispin::analyze(rho), fermispin::fit_weights(rho),
                                              closed);
    } catch (const fermispin::DegenerateConfiguration &e) {
        std::cerr << "degenerate configuration: " << e.what() << '\n';
        return kExitDegenerate;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spin entanglement of fermions in an ideal Fermi gas at zero temperature"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fermispin::kToolVersion));

    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)");

    auto *figure = app.add_subcommand("figure", "Compute the dataset of one of the four figures");
    int figure_id = 0;
    std::string figure_out = ".";
    fermispin::FigureOverrides overrides;
    std::size_t grid_points = 0;
    double base = 0.0;
    double x_max = 0.0;
    double eps = 0.0;
    double stop = 0.0;
    figure->add_option("id", figure_id, "Figure number")->required()->check(CLI::Range(1, 4));
    figure->add_option("--out", figure_out, "Output directory");
    auto *grid_opt = figure->add_option("--grid", grid_points, "Grid points")->check(CLI::PositiveNumber);
    auto *base_opt = figure->add_option("--base", base, "Isosceles base length (figure 2)");
    auto *xmax_opt = figure->add_option("--xmax", x_max, "Distance between fermions 1 and 3 (figure 1)");
    auto *eps_opt = figure->add_option("--eps", eps, "First simplex edge (figures 3, 4)");
    auto *stop_opt = figure->add_option("--stop", stop, "Last grid value (figures 2, 3, 4)");

    auto *sweep = app.add_subcommand("sweep", "Run a scenario file");
    std::string sweep_spec;
    std::string sweep_out = ".";
    sweep->add_option("--spec", sweep_spec, "Scenario JSON file")->required();
    sweep->add_option("--out", sweep_out, "Output directory")->required();

    auto *analyze_cmd = app.add_subcommand("analyze", "Entanglement report for one configuration");
    std::string analyze_spec;
    analyze_cmd->add_option("--spec", analyze_spec, "Scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    const fermispin::RunOptions options{threads};
    try {
        if (*figure) {
            if (*grid_opt) overrides.grid_points = grid_points;
            if (*base_opt) overrides.base = base;
            if (*xmax_opt) overrides.x_max = x_max;
            if (*eps_opt) overrides.eps = eps;
            if (*stop_opt) overrides.stop = stop;
            const auto result = fermispin::run_figure(figure_id, overrides, options);
            return write_outputs(result, figure_out, "figure" + std::to_string(figure_id));
        }
        if (*sweep) {
            const auto spec = fermispin::load_scenario(sweep_spec);
            const auto result = fermispin::run_scenario(spec, options);
            return write_outputs(result, sweep_out, fs::path(sweep_spec).stem().string());
        }
        if (*analyze_cmd) {
            return analyze(fermispin::load_scenario(analyze_spec));
        }
    } catch (const fermispin::SpecError &e) {
        std::cerr << "invalid scenario: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const fermispin::InvalidArgument &e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}
