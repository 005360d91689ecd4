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
#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fermispin/entanglement.hpp"
#include "fermispin/errors.hpp"
#include "fermispin/report_io.hpp"
#include "oracles.hpp"

namespace fermispin {
namespace {

std::string csv_of(const SweepResult &result) {
    std::ostringstream out;
    write_csv(out, result);
    return out.str();
}

TEST(RunScenario, PairSweepMatchesClosedForm) {
    const auto spec = parse_scenario(R"({
      "kind": "custom", "positions": [[0, 0, 0], [1, 0, 0]],
      "grid": {"start": 0, "stop": 6, "points": 121}
    })");
    const auto result = run_scenario(spec);
    ASSERT_EQ(result.columns, std::vector<std::string>{"N_1_2"});
    for (const auto &row : result.rows) {
        ASSERT_FALSE(row.degenerate);
        const double f = oracle::kernel(row.x);
        const double expected = std::max(0.0, (2 * f * f - 1) / (2 * (2 - f * f)));
        EXPECT_NEAR(*row.values[0], expected, 1e-10) << "x = " << row.x;
    }
}

TEST(RunScenario, SimplexColumnsAndResidual) {
    const auto spec = parse_scenario(R"({
      "kind": "simplex", "n": 4, "grid": {"start": 0.5, "stop": 3, "points": 6},
      "outputs": ["negativity", "entropy", "weights", "residual"]
    })");
    const auto result = run_scenario(spec);
    EXPECT_EQ(result.columns.front(), "N_1_234");
    EXPECT_NE(std::find(result.columns.begin(), result.columns.end(), "S4_bits"), result.columns.end());
    EXPECT_NE(std::find(result.columns.begin(), result.columns.end(), "w_34"), result.columns.end());
    EXPECT_EQ(result.columns.back(), "residual");
    ASSERT_TRUE(result.scalar("max_residual").has_value());
    for (const auto &r : result.column("residual")) {
        EXPECT_GE(*r, 0.0);
    }
    EXPECT_THROW((void)result.column("nope"), InvalidArgument);
}

TEST(RunScenario, ResultsAreIndependentOfThreadCount) {
    const auto spec = parse_scenario(R"({
      "kind": "custom", "n": 5, "seed": 3, "grid": {"start": 0.5, "stop": 4, "points": 40},
      "outputs": ["negativity", "entropy", "weights", "residual"]
    })");
    const auto single = csv_of(run_scenario(spec, RunOptions{1}));
    EXPECT_EQ(csv_of(run_scenario(spec, RunOptions{4})), single);
    EXPECT_EQ(csv_of(run_scenario(spec, RunOptions{16})), single);
}

TEST(RunScenario, DegenerateRowsAreFlaggedNotFatal) {
    const auto spec = parse_scenario(R"({
      "kind": "custom", "positions": [[1, 0, 0], [1, 0, 0], [1, 0, 0]],
      "grid": {"start": 0, "stop": 1, "points": 3}
    })");
    const auto result = run_scenario(spec);
    EXPECT_TRUE(result.all_degenerate());
    for (const auto &row : result.rows) {
        EXPECT_TRUE(row.degenerate);
        EXPECT_FALSE(row.values[0].has_value());
    }
    const auto csv = csv_of(result);
    EXPECT_NE(csv.find(",,,true\n"), std::string::npos);
}

TEST(RunFigure, LineIsSymmetricAboutTheMidpoint) {
    const auto result = run_figure(1);
    const auto n = result.column("N_2_13");
    ASSERT_EQ(n.size(), FigureDefaults::line_points);
    for (std::size_t k = 0; k < n.size(); ++k) {
        EXPECT_NEAR(*n[k], *n[n.size() - 1 - k], 1e-10);
    }
}

TEST(RunFigure, IsoscelesLimits) {
    const auto result = run_figure(2);
    const auto apex = result.column("N_1_23");
    const auto base = result.column("N_2_13");
    for (std::size_t k = 1; k < apex.size(); ++k) {
        EXPECT_LE(*apex[k], *apex[k - 1] + 1e-12);
    }
    EXPECT_EQ(*apex.back(), 0.0);
    EXPECT_NEAR(*base.back(), two_fermion_negativity(ScaledDistance(1.0)), 1e-4);
    EXPECT_NEAR(*result.scalar("two_fermion_negativity_base"), two_fermion_negativity(ScaledDistance(1.0)), 1e-15);
}

TEST(RunFigure, OverridesAreCheckedPerFigure) {
    FigureOverrides base_only;
    base_only.base = 2.0;
    EXPECT_THROW((void)run_figure(1, base_only), InvalidArgument);
    EXPECT_THROW((void)run_figure(5), InvalidArgument);
    FigureOverrides grid;
    grid.grid_points = 5;
    EXPECT_EQ(run_figure(3, grid).rows.size(), 5U);
}

TEST(RunFigure, EntropyFigureCarriesCoincidentScalars) {
    FigureOverrides grid;
    grid.grid_points = 3;
    const auto result = run_figure(4, grid);
    EXPECT_NEAR(*result.scalar("coincident_entropy_bound_bits_n4"), std::log2(11.0), 1e-14);
    EXPECT_NEAR(*result.scalar("S2_bits_at_0"), 0.0, 1e-10);
    EXPECT_EQ(result.columns.size(), 6U);
}

TEST(ReportIo, NumberFormatting) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(1e-20), "1e-20");
    EXPECT_EQ(format_number(std::nan("")), "nan");
    EXPECT_EQ(std::stod(format_number(0.26723776920938264)), 0.267237769209383);
}

TEST(ReportIo, JsonReportShape) {
    FigureOverrides grid;
    grid.grid_points = 4;
    const auto result = run_figure(3, grid);
    const auto doc = nlohmann::json::parse(report_json(result));
    EXPECT_EQ(doc.at("tool_version"), std::string(kToolVersion));
    EXPECT_EQ(doc.at("columns").size(), 5U);
    EXPECT_EQ(doc.at("rows"), 4);
    EXPECT_TRUE(doc.at("scalars").contains("threshold_x"));
    EXPECT_FALSE(doc.at("timestamp").get<std::string>().empty());
    EXPECT_TRUE(doc.at("parameters").is_object());
}

TEST(ReportIo, CsvLayout) {
    FigureOverrides grid;
    grid.grid_points = 3;
    const auto csv = csv_of(run_figure(3, grid));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,N_1_2,N_1_23,N_1_234,degenerate");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(SurveyPairForm, ThreeSpinsAreExact) {
    const auto survey = survey_pair_form(3, 200, 6.0, 5);
    EXPECT_EQ(survey.samples, 200U);
    EXPECT_LT(survey.max_residual, 1e-10);
    ASSERT_TRUE(survey.max_closed_form_deviation.has_value());
    EXPECT_LT(*survey.max_closed_form_deviation, 1e-10);
}

} // namespace
} // namespace fermispin
