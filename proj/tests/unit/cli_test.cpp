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
// End-to-end checks of the command line tool: exit codes and reproducible
// output files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Run {
    int status;
    std::string out;
};

Run run(const std::string &args) {
    const std::string command = std::string(FERMISPIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, {}};
    }
    std::string out;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) {
        out.append(buffer, n);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fermispin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &text) {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path;
    }

    fs::path dir_;
};

TEST_F(CliTest, FigureOutputsAreByteIdenticalAcrossRuns) {
    ASSERT_EQ(run("figure 1 --grid 21 --out " + (dir_ / "a").string()).status, 0);
    ASSERT_EQ(run("--threads 3 figure 1 --grid 21 --out " + (dir_ / "b").string()).status, 0);
    const auto a = slurp(dir_ / "a" / "figure1.csv");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir_ / "b" / "figure1.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "a" / "figure1.json"));
}

TEST_F(CliTest, SweepWritesFilesNamedAfterTheSpec) {
    const auto spec = write("pair.json", R"({"kind": "simplex", "n": 2, "grid": {"start": 0, "stop": 3, "points": 4}})");
    EXPECT_EQ(run("sweep --spec " + spec.string() + " --out " + (dir_ / "out").string()).status, 0);
    EXPECT_TRUE(fs::exists(dir_ / "out" / "pair.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "out" / "pair.json"));
}

TEST_F(CliTest, AllDegenerateExitsOne) {
    const auto spec = write("same.json", R"({"kind": "custom", "positions": [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
                                             "grid": {"start": 0, "stop": 1, "points": 2}})");
    EXPECT_EQ(run("sweep --spec " + spec.string() + " --out " + (dir_ / "out").string()).status, 1);
    EXPECT_EQ(run("analyze --spec " + spec.string()).status, 1);
}

TEST_F(CliTest, InvalidInputExitsTwo) {
    const auto bad = write("bad.json", R"({"kind": "simplex", "n": 9, "grid": {"start": 0, "stop": 1, "points": 2}})");
    EXPECT_EQ(run("sweep --spec " + bad.string() + " --out " + dir_.string()).status, 2);
    EXPECT_EQ(run("sweep --spec " + (dir_ / "missing.json").string() + " --out " + dir_.string()).status, 2);
    EXPECT_EQ(run("figure 7").status, 2);
    EXPECT_EQ(run("figure 1 --base 2 --out " + dir_.string()).status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST_F(CliTest, AnalyzePrintsJson) {
    const auto spec = write("tri.json", R"({"kind": "simplex", "n": 3, "grid": {"start": 1, "stop": 2, "points": 2}})");
    const auto result = run("analyze --spec " + spec.string());
    EXPECT_EQ(result.status, 0);
    EXPECT_NE(result.out.find("\"negativity\""), std::string::npos);
    EXPECT_NE(result.out.find("\"pair_weights_closed_form\""), std::string::npos);
}

TEST_F(CliTest, VersionFlag) {
    const auto result = run("--version");
    EXPECT_EQ(result.status, 0);
    EXPECT_NE(result.out.find("0.1.0"), std::string::npos);
}

} // namespace
