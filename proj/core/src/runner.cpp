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
#include "fermispin/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fermispin/entanglement.hpp"
#include "fermispin/errors.hpp"
#include "fermispin/pair_decomposition.hpp"
#include "fermispin/qops.hpp"
#include "fermispin/wick.hpp"

namespace fermispin {

namespace {

using RowFunction = std::function<SweepRow(double)>;

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::vector<SweepRow> evaluate_rows(const std::vector<double> &grid, const RowFunction &row,
                                    const RunOptions &options) {
    std::vector<SweepRow> rows(grid.size());
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1U, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < grid.size(); k = next++) {
            try {
                rows[k] = row(grid[k]);
                rows[k].x = grid[k];
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = grid.size();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(work);
        }
        work();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

/// Wick state, or nullopt when the configuration is Pauli-forbidden.
std::optional<SpinDensityMatrix> try_state(const Configuration &config) {
    try {
        return spin_density_matrix(config);
    } catch (const DegenerateConfiguration &) {
        return std::nullopt;
    }
}

void add_common_scalars(SweepResult &result) {
    result.scalars.emplace_back("threshold_x", pair_entanglement_threshold(1e-12).value());
    for (std::size_t n = 2; n <= 4; ++n) {
        result.scalars.emplace_back("coincident_entropy_bound_bits_n" + std::to_string(n),
                                    coincident_entropy_bound(n, LogBase::bits));
        result.scalars.emplace_back("coincident_entropy_bound_nats_n" + std::to_string(n),
                                    coincident_entropy_bound(n, LogBase::nats));
    }
    constexpr std::uint64_t kSurveySeed = 20061;
    const auto three = survey_pair_form(3, 1000, 6.0, kSurveySeed);
    result.scalars.emplace_back("pair_form_n3_samples", static_cast<double>(three.samples));
    result.scalars.emplace_back("pair_form_n3_max_residual", three.max_residual);
    result.scalars.emplace_back("pair_form_n3_max_closed_form_deviation",
                                three.max_closed_form_deviation.value_or(0.0));
    const auto four = survey_pair_form(4, 100, 6.0, kSurveySeed);
    result.scalars.emplace_back("pair_form_n4_samples", static_cast<double>(four.samples));
    result.scalars.emplace_back("pair_form_n4_degenerate", static_cast<double>(four.degenerate));
    result.scalars.emplace_back("pair_form_n4_max_residual", four.max_residual);
    result.scalars.emplace_back("pair_form_n4_mean_residual", four.mean_residual);
}

double entropy_bits_or_nan(const Configuration &config) {
    const auto rho = try_state(config);
    return rho ? von_neumann_entropy(*rho, LogBase::bits) : std::nan("");
}

} // namespace

bool SweepResult::all_degenerate() const noexcept {
    return !rows.empty() &&
           std::all_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.degenerate; });
}

std::vector<std::optional<double>> SweepResult::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw InvalidArgument("no column named " + std::string(name));
    }
    const auto index = static_cast<std::size_t>(it - columns.begin());
    std::vector<std::optional<double>> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        out.push_back(r.values[index]);
    }
    return out;
}

std::optional<double> SweepResult::scalar(std::string_view name) const {
    for (const auto &[key, value] : scalars) {
        if (key == name) {
            return value;
        }
    }
    return std::nullopt;
}

std::vector<std::string> scenario_columns(const ScenarioSpec &spec) {
    std::vector<std::string> columns;
    const std::size_t n = spec.n;
    for (auto output : spec.outputs) {
        switch (output) {
        case Output::negativity:
            for (const auto &part : canonical_bipartitions(n)) {
                columns.push_back("N_" + part.name());
            }
            break;
        case Output::entropy:
            columns.push_back("S" + std::to_string(n) + "_bits");
            columns.push_back("S" + std::to_string(n) + "_nats");
            break;
        case Output::weights:
            columns.emplace_back("w0");
            for (const auto &p : spin_pairs(n)) {
                columns.push_back("w_" + std::to_string(p.first + 1) + std::to_string(p.second + 1));
            }
            break;
        case Output::residual:
            columns.emplace_back("residual");
            break;
        case Output::witnesses:
            columns.emplace_back("W_GHZ");
            columns.emplace_back("W_W3");
            break;
        }
    }
    return columns;
}

SweepResult run_scenario(const ScenarioSpec &input, const RunOptions &options) {
    ScenarioSpec spec = input;
    validate(spec);

    SweepResult result;
    result.columns = scenario_columns(spec);
    result.metadata.description = "scenario sweep (" + std::string(to_string(spec.kind)) + ")";
    result.metadata.parameters_json = to_json(spec);
    result.metadata.timestamp = utc_timestamp();

    const std::vector<double> grid = spec.grid ? spec.grid->values() : std::vector<double>{1.0};
    const auto wants = [&](Output o) {
        return std::find(spec.outputs.begin(), spec.outputs.end(), o) != spec.outputs.end();
    };
    const auto bipartitions = canonical_bipartitions(spec.n);
    const std::size_t width = result.columns.size();

    const RowFunction row = [&](double x) {
        SweepRow out;
        out.values.assign(width, std::nullopt);
        const auto rho = try_state(scenario_configuration(spec, x));
        if (!rho) {
            out.degenerate = true;
            return out;
        }
        std::optional<PairWeights> fit;
        if (wants(Output::weights) || wants(Output::residual)) {
            fit = fit_weights(*rho);
        }
        std::size_t c = 0;
        for (auto output : spec.outputs) {
            switch (output) {
            case Output::negativity:
                for (const auto &part : bipartitions) {
                    out.values[c++] = negativity(*rho, part);
                }
                break;
            case Output::entropy: {
                const double nats = von_neumann_entropy(*rho, LogBase::nats);
                out.values[c++] = nats / std::numbers::ln2;
                out.values[c++] = nats;
                break;
            }
            case Output::weights:
                out.values[c++] = fit->background();
                for (double w : fit->singlet()) {
                    out.values[c++] = w;
                }
                break;
            case Output::residual:
                out.values[c++] = *fit->residual();
                break;
            case Output::witnesses:
                out.values[c++] = witness_expectation(*rho, Witness::ghz);
                out.values[c++] = witness_expectation(*rho, Witness::w3);
                break;
            }
        }
        return out;
    };
    result.rows = evaluate_rows(grid, row, options);

    result.scalars.emplace_back("threshold_x", pair_entanglement_threshold(1e-12).value());
    result.scalars.emplace_back("coincident_entropy_bound_bits", coincident_entropy_bound(spec.n, LogBase::bits));
    result.scalars.emplace_back("coincident_entropy_bound_nats", coincident_entropy_bound(spec.n, LogBase::nats));
    if (wants(Output::residual)) {
        double worst = 0.0;
        for (const auto &v : result.column("residual")) {
            worst = std::max(worst, v.value_or(0.0));
        }
        result.scalars.emplace_back("max_residual", worst);
    }
    return result;
}

SweepResult run_figure(int id, const FigureOverrides &overrides, const RunOptions &options) {
    auto reject = [&](bool present, const char *flag) {
        if (present) {
            throw InvalidArgument(std::string(flag) + " does not apply to figure " + std::to_string(id));
        }
    };
    auto points = [&](std::size_t fallback) {
        const std::size_t p = overrides.grid_points.value_or(fallback);
        if (p < 2) {
            throw InvalidArgument("figure grids need at least 2 points");
        }
        return p;
    };

    SweepResult result;
    nlohmann::json parameters;
    parameters["figure"] = id;
    Grid grid;
    RowFunction row;

    switch (id) {
    case 1: {
        reject(overrides.base.has_value(), "--base");
        reject(overrides.eps.has_value(), "--eps");
        reject(overrides.stop.has_value(), "--stop");
        const double x_max = overrides.x_max.value_or(FigureDefaults::line_x_max);
        if (!(x_max > 0.0) || !std::isfinite(x_max)) {
            throw InvalidArgument("--xmax must be positive");
        }
        grid = Grid{0.0, x_max, points(FigureDefaults::line_points)};
        parameters["x_max"] = x_max;
        result.metadata.description = "N_[2,13] for fermion 2 moving between fermions 1 and 3";
        result.columns = {"N_2_13"};
        const Bipartition middle(3, {1});
        row = [x_max, middle](double x) {
            SweepRow out;
            const auto rho = try_state(line_configuration(ScaledDistance(x_max), ScaledDistance(x)));
            out.degenerate = !rho;
            out.values = {rho ? std::optional(negativity(*rho, middle)) : std::nullopt};
            return out;
        };
        break;
    }
    case 2: {
        reject(overrides.x_max.has_value(), "--xmax");
        reject(overrides.eps.has_value(), "--eps");
        const double base = overrides.base.value_or(FigureDefaults::isosceles_base);
        const double stop = overrides.stop.value_or(FigureDefaults::isosceles_height);
        if (!(base > 0.0) || !std::isfinite(base)) {
            throw InvalidArgument("--base must be positive");
        }
        if (!(stop > 0.0) || !std::isfinite(stop)) {
            throw InvalidArgument("--stop must be positive");
        }
        grid = Grid{0.0, stop, points(FigureDefaults::isosceles_points)};
        parameters["base"] = base;
        result.metadata.description =
            "N_[1,23] and N_[2,13] for fermion 1 moving away from the base 2-3 of an isosceles triangle";
        result.columns = {"N_1_23", "N_2_13"};
        const Bipartition apex(3, {0});
        const Bipartition corner(3, {1});
        row = [base, apex, corner](double h) {
            SweepRow out;
            const auto rho = try_state(isosceles_configuration(ScaledDistance(base), ScaledDistance(h)));
            out.degenerate = !rho;
            if (rho) {
                out.values = {negativity(*rho, apex), negativity(*rho, corner)};
            } else {
                out.values.assign(2, std::nullopt);
            }
            return out;
        };
        result.scalars.emplace_back("two_fermion_negativity_base", two_fermion_negativity(ScaledDistance(base)));
        break;
    }
    case 3:
    case 4: {
        reject(overrides.x_max.has_value(), "--xmax");
        reject(overrides.base.has_value(), "--base");
        const double eps = overrides.eps.value_or(FigureDefaults::simplex_eps);
        const double stop = overrides.stop.value_or(FigureDefaults::simplex_stop);
        if (!(eps >= 0.0) || !std::isfinite(eps) || !(stop > eps) || !std::isfinite(stop)) {
            throw InvalidArgument("figure edge grid needs 0 <= eps < stop");
        }
        grid = Grid{eps, stop, points(FigureDefaults::simplex_points)};
        parameters["eps"] = eps;
        if (id == 3) {
            result.metadata.description =
                "N_[1,2], N_[1,23], N_[1,234] for 2, 3, 4 fermions on a regular simplex";
            result.columns = {"N_1_2", "N_1_23", "N_1_234"};
            row = [](double edge) {
                SweepRow out;
                for (std::size_t n = 2; n <= 4; ++n) {
                    const auto rho = try_state(regular_simplex_configuration(n, ScaledDistance(edge)));
                    out.degenerate = out.degenerate || !rho;
                    out.values.push_back(rho ? std::optional(negativity(*rho, Bipartition(n, {0})))
                                             : std::nullopt);
                }
                return out;
            };
        } else {
            result.metadata.description = "von Neumann entropy of 2, 3, 4 fermions on a regular simplex";
            result.columns = {"S2_bits", "S3_bits", "S4_bits", "S2_nats", "S3_nats", "S4_nats"};
            row = [](double edge) {
                SweepRow out;
                out.values.assign(6, std::nullopt);
                for (std::size_t n = 2; n <= 4; ++n) {
                    const auto rho = try_state(regular_simplex_configuration(n, ScaledDistance(edge)));
                    out.degenerate = out.degenerate || !rho;
                    if (rho) {
                        const double nats = von_neumann_entropy(*rho, LogBase::nats);
                        out.values[n - 2] = nats / std::numbers::ln2;
                        out.values[n + 1] = nats;
                    }
                }
                return out;
            };
            result.scalars.emplace_back(
                "S2_bits_at_0", entropy_bits_or_nan(regular_simplex_configuration(2, ScaledDistance(0.0))));
            for (std::size_t n = 2; n <= 4; ++n) {
                result.scalars.emplace_back(
                    "S" + std::to_string(n) + "_bits_at_eps",
                    entropy_bits_or_nan(regular_simplex_configuration(n, ScaledDistance(eps))));
            }
            // Uniform mixture of the six pair singlets of four spins.
            const double mixture =
                von_neumann_entropy(reconstruct(PairWeights(4, std::vector<double>(6, 1.0 / 6.0))));
            const double s4 = *result.scalar("S4_bits_at_eps");
            result.scalars.emplace_back("equal_singlet_mixture_bits_n4", mixture);
            result.scalars.emplace_back("S4_eps_minus_coincident_bound_bits",
                                        s4 - coincident_entropy_bound(4, LogBase::bits));
            result.scalars.emplace_back("S4_eps_minus_equal_singlet_mixture_bits", s4 - mixture);
        }
        break;
    }
    default:
        throw InvalidArgument("figure id must be 1, 2, 3 or 4, got " + std::to_string(id));
    }

    parameters["grid"] = {{"start", grid.start}, {"stop", grid.stop}, {"points", grid.points}};
    result.metadata.parameters_json = parameters.dump();
    result.metadata.timestamp = utc_timestamp();
    result.rows = evaluate_rows(grid.values(), row, options);
    add_common_scalars(result);
    return result;
}

PairFormSurvey survey_pair_form(std::size_t num_spins, std::size_t samples, double box,
                                std::uint64_t seed) {
    PairFormSurvey survey;
    survey.num_spins = num_spins;
    double total = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const auto config = random_configuration(num_spins, ScaledDistance(box), seed + k);
        const auto exchange = exchange_matrix(config);
        std::optional<SpinDensityMatrix> rho;
        try {
            rho = spin_density_matrix(exchange);
        } catch (const DegenerateConfiguration &) {
            ++survey.degenerate;
            continue;
        }
        const auto fit = fit_weights(*rho);
        ++survey.samples;
        total += *fit.residual();
        survey.max_residual = std::max(survey.max_residual, *fit.residual());
        if (num_spins <= 3) {
            const auto closed = closed_form_weights(exchange);
            double deviation = survey.max_closed_form_deviation.value_or(0.0);
            for (std::size_t a = 0; a < closed.singlet().size(); ++a) {
                deviation = std::max(deviation, std::abs(closed.singlet()[a] - fit.singlet()[a]));
            }
            survey.max_closed_form_deviation = deviation;
        }
    }
    survey.mean_residual = survey.samples > 0 ? total / static_cast<double>(survey.samples) : 0.0;
    return survey;
}

} // namespace fermispin
