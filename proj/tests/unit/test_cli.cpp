// Copyright 2026 The q3pen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace q3pen::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "q3pen");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string worked_path() { return std::string(Q3PEN_SCENARIO_DIR) + "/worked_example.json"; }

std::string write_temp(const std::string &name, const std::string &body) {
    const auto path = std::filesystem::temp_directory_path() / ("q3pen_cli_" + name);
    std::ofstream(path) << body;
    return path.string();
}

std::string last_line(const std::string &csv) {
    auto body = csv;
    while (!body.empty() && body.back() == '\n') body.pop_back();
    return body.substr(body.rfind('\n') + 1);
}

TEST(CliRun, WorkedExampleTranscript) {
    const auto r = invoke({"run", worked_path()});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find(R"("t_A":5,"t_B":5,"trade":true)"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST(CliRun, MismatchedPriceListsExitTwo) {
    const auto path = write_temp("mismatch.json", R"({"N": 2, "A": [1, 2], "B": [1], "epsilon": 1})");
    const auto r = invoke({"run", path});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(CliRun, MalformedJsonExitTwo) {
    const auto path = write_temp("malformed.json", R"({"N": 2, "A": [1, 2)");
    EXPECT_EQ(invoke({"run", path}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "/nonexistent/q3pen.json"}).code, kExitUsage);
}

TEST(CliRun, SameSeedIsByteIdentical) {
    const auto a = invoke({"run", worked_path(), "--seed", "7"});
    const auto b = invoke({"run", worked_path(), "--seed", "7"});
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find(R"("seed":7)"), std::string::npos);
}

TEST(CliRun, CapacityGuardExitThree) {
    const auto r = invoke({"run", worked_path(), "--max-qubits", "12"});
    EXPECT_EQ(r.code, kExitResource);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliRun, FlagsOverrideFile) {
    const auto r = invoke({"run", worked_path(), "--t", "5", "--shots", "3", "--c", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find(R"("m":9)"), std::string::npos);
    EXPECT_NE(r.out.find(R"("t":5)"), std::string::npos);
    EXPECT_EQ(invoke({"run", worked_path(), "--c", "1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", worked_path(), "--shots", "0"}).code, kExitUsage);
}

TEST(CliRun, AdversaryRouting) {
    const auto r = invoke({"run", worked_path(), "--adversary", "bob:measure-and-cheat"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find(R"("behavior":"measure-and-cheat")"), std::string::npos);
    EXPECT_NE(r.out.find(R"("learned")"), std::string::npos);
    EXPECT_EQ(invoke({"run", worked_path(), "--adversary", "carol:honest"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", worked_path(), "--adversary", "bob"}).code, kExitUsage);
}

TEST(CliRun, TimingIsOptIn) {
    EXPECT_EQ(invoke({"run", worked_path()}).out.find("step_timings"), std::string::npos);
    EXPECT_NE(invoke({"run", worked_path(), "--timing"}).out.find("step_timings"), std::string::npos);
}

TEST(CliCosts, Rows) {
    const auto r = invoke({"costs", "--d", "2", "--n-max", "7"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "N,q3pen,c05,a07");
    EXPECT_EQ(last_line(r.out), "7,16,28,56");
    EXPECT_EQ(last_line(invoke({"costs", "--d", "1", "--n-max", "1"}).out), "1,6,2,4");
    EXPECT_EQ(last_line(invoke({"costs", "--d", "2", "--n-max", "7", "--split"}).out), "7,16,28,56,10,6");
}

TEST(CliCosts, InvalidFlagsExitTwo) {
    EXPECT_EQ(invoke({"costs", "--d", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"costs", "--n-max", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"costs", "--d", "two"}).code, kExitUsage);
}

TEST(CliDetect, Rows) {
    const auto r = invoke({"detect", "--c", "2", "--n-max", "3"});
    ASSERT_EQ(r.code, kExitOk);
    const auto row = last_line(r.out);
    ASSERT_EQ(row.substr(0, 4), "3,6,");
    EXPECT_NEAR(std::stod(row.substr(4)), 0.9531, 1e-4);

    const auto curve = invoke({"detect", "--c", "1.5", "--n-max", "12"}).out;
    std::istringstream lines(curve);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "n,m,p_detect");
    double prev = -1.0;
    while (std::getline(lines, line)) {
        const double p = std::stod(line.substr(line.rfind(',') + 1));
        EXPECT_GT(p, prev);
        prev = p;
    }
}

TEST(CliDetect, SmallExpansionExitTwo) { EXPECT_EQ(invoke({"detect", "--c", "1.0"}).code, kExitUsage); }

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run"}).code, kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace q3pen::cli
