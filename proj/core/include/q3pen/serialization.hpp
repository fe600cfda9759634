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

/**
 * @file
 * JSON scenario files and transcript output.
 *
 * Scenario file:
 *
 *     {"N": 6, "A": [3,2,5,4,7,6], "B": [2,2,5,5,6,6], "epsilon": 5,
 *      "counting": {"t": 6, "shots": 11}, "commitment": {"c": 2}, "seed": 42}
 *
 * "counting", "commitment" and "seed" are optional (defaults t=6, shots=11,
 * c=2, seed=42). Transcripts carry "schema_version" and are emitted with
 * sorted keys; see README.md for the field list.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "q3pen/protocol.hpp"

namespace q3pen {

inline constexpr int kTranscriptSchemaVersion = 1;

struct ScenarioFile {
    PriceScenario scenario;
    CountingParams counting;
    CodeSpec code;
    std::uint64_t seed = 42;
};

/// Throws ArgumentError on malformed JSON or an invalid scenario.
ScenarioFile parse_scenario_json(std::string_view text);

struct JsonOptions {
    bool pretty = false;
    bool include_timings = false;  // wall-clock data breaks byte-for-byte reproducibility
};

std::string transcript_to_json(const NegotiationTranscript &transcript, const JsonOptions &options = {});

}  // namespace q3pen
