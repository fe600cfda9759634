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

#include <json.hpp>

#include "q3pen/errors.hpp"
#include "q3pen/serialization.hpp"

namespace q3pen {
namespace {

constexpr const char *kWorked = R"({"N": 6, "A": [3,2,5,4,7,6], "B": [2,2,5,5,6,6], "epsilon": 5})";

TEST(ScenarioJson, DefaultsForMissingBlocks) {
    const auto file = parse_scenario_json(kWorked);
    EXPECT_EQ(file.scenario.num_products(), 6);
    EXPECT_EQ(file.scenario.threshold(), 5);
    EXPECT_EQ(file.counting.precision_qubits, 6);
    EXPECT_EQ(file.counting.shots, 11);
    EXPECT_DOUBLE_EQ(file.code.expansion, 2.0);
    EXPECT_EQ(file.code.family, CodeFamily::kRandom);
    EXPECT_EQ(file.seed, 42U);
}

TEST(ScenarioJson, OptionalBlocksOverrideDefaults) {
    const auto file = parse_scenario_json(
        R"({"N": 2, "A": [1,0], "B": [0,1], "epsilon": 1, "counting": {"t": 4, "shots": 3},
            "commitment": {"c": 3, "code": "parity-repetition"}, "seed": 9})");
    EXPECT_EQ(file.counting.precision_qubits, 4);
    EXPECT_EQ(file.counting.shots, 3);
    EXPECT_DOUBLE_EQ(file.code.expansion, 3.0);
    EXPECT_EQ(file.code.family, CodeFamily::kParityRepetition);
    EXPECT_EQ(file.seed, 9U);
}

TEST(ScenarioJson, RejectsInvalidDocuments) {
    EXPECT_THROW(parse_scenario_json("{"), ArgumentError);
    EXPECT_THROW(parse_scenario_json("[]"), ArgumentError);
    EXPECT_THROW(parse_scenario_json(R"({"N": 2, "A": [1,0], "B": [0], "epsilon": 1})"), ArgumentError);
    EXPECT_THROW(parse_scenario_json(R"({"N": 3, "A": [1,0], "B": [0,1], "epsilon": 1})"), ArgumentError);
    EXPECT_THROW(parse_scenario_json(R"({"N": 2, "A": [1,0], "B": [0,1]})"), ArgumentError);
    EXPECT_THROW(parse_scenario_json(R"({"N": 2, "A": [1,0], "B": [0,1], "epsilon": 3})"), ArgumentError);
    EXPECT_THROW(parse_scenario_json(R"({"N": 2, "A": ["x",0], "B": [0,1], "epsilon": 1})"), ArgumentError);
    EXPECT_THROW(parse_scenario_json(R"({"N": 2, "A": [1,0], "B": [0,1], "epsilon": 1, "commitment": {"c": 1}})"),
                 ArgumentError);
    EXPECT_THROW(
        parse_scenario_json(R"({"N": 2, "A": [1,0], "B": [0,1], "epsilon": 1, "commitment": {"code": "ldpc"}})"),
        ArgumentError);
}

TEST(TranscriptJson, DocumentedShape) {
    const auto file = parse_scenario_json(kWorked);
    const auto tr = run_negotiation(file.scenario, file.counting, file.code, file.seed);
    const std::string text = transcript_to_json(tr);
    EXPECT_NE(text.find(R"("t_A":5,"t_B":5,"trade":true)"), std::string::npos);

    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc.at("schema_version"), kTranscriptSchemaVersion);
    EXPECT_EQ(doc.at("scenario").at("N"), 6);
    EXPECT_EQ(doc.at("scenario").at("n"), 3);
    EXPECT_EQ(doc.at("scenario").at("d"), 3);
    EXPECT_EQ(doc.at("params").at("t"), 6);
    EXPECT_EQ(doc.at("params").at("m"), 6);
    EXPECT_EQ(doc.at("costs").at("qubits"), 12);
    EXPECT_EQ(doc.at("costs").at("cbits"), 6);
    EXPECT_EQ(doc.at("costs").at("fingerprint_qubits"), 6);
    EXPECT_EQ(doc.at("messages").size(), 6U);
    EXPECT_EQ(doc.at("estimates").at("alice").at("m_hat"), 5);
    EXPECT_EQ(doc.at("estimates").at("bob").at("shot_outcomes").size(), 11U);
    EXPECT_EQ(doc.at("commitments").size(), 2U);
    EXPECT_TRUE(doc.at("consistent").get<bool>());
    EXPECT_FALSE(doc.contains("step_timings"));
    EXPECT_FALSE(doc.contains("adversary"));
}

TEST(TranscriptJson, TimingsAndAdversaryAreOptIn) {
    const auto file = parse_scenario_json(kWorked);
    const auto report = run_with_adversary(file.scenario, Adversary{PartyRole::kBob, Behavior::kMeasureAndCheat, {}},
                                           file.counting, file.code, 3);
    const auto doc = nlohmann::json::parse(transcript_to_json(report.transcript, {true, true}));
    EXPECT_EQ(doc.at("step_timings").size(), 6U);
    EXPECT_EQ(doc.at("adversary").at("party"), "bob");
    EXPECT_EQ(doc.at("adversary").at("behavior"), "measure-and-cheat");
    EXPECT_TRUE(doc.at("adversary").contains("learned"));
}

}  // namespace
}  // namespace q3pen
