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

#include "q3pen/serialization.hpp"

#include <json.hpp>

#include "q3pen/errors.hpp"

namespace q3pen {

namespace {

using nlohmann::json;

template <typename T>
T required(const json &doc, const char *key) {
    if (!doc.contains(key)) throw ArgumentError(std::string("scenario is missing \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ArgumentError(std::string("scenario field \"") + key + "\": " + e.what());
    }
}

template <typename T>
T optional_field(const json &block, const char *key, T fallback) {
    if (!block.contains(key)) return fallback;
    try {
        return block.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ArgumentError(std::string("scenario field \"") + key + "\": " + e.what());
    }
}

json estimate_json(const CountEstimate &e) {
    json shots = json::array();
    for (const auto &s : e.shots) shots.push_back(s.outcome);
    return {{"m_hat", e.m_hat},
            {"theta_hat", e.theta_hat},
            {"delta", e.delta},
            {"raw_outcome", e.raw_outcome},
            {"shot_outcomes", shots}};
}

}  // namespace

ScenarioFile parse_scenario_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ArgumentError(std::string("malformed scenario JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ArgumentError("scenario must be a JSON object");

    const auto n = required<std::int64_t>(doc, "N");
    auto buyer = required<std::vector<std::int64_t>>(doc, "A");
    auto seller = required<std::vector<std::int64_t>>(doc, "B");
    const auto epsilon = required<std::int64_t>(doc, "epsilon");
    if (n != static_cast<std::int64_t>(buyer.size()) || n != static_cast<std::int64_t>(seller.size())) {
        throw ArgumentError("N does not match the lengths of A and B");
    }

    ScenarioFile file{PriceScenario(std::move(buyer), std::move(seller), epsilon), {}, {}, 42};
    if (doc.contains("counting")) {
        const auto &block = doc.at("counting");
        if (!block.is_object()) throw ArgumentError("\"counting\" must be an object");
        file.counting.precision_qubits = optional_field<int>(block, "t", file.counting.precision_qubits);
        file.counting.shots = optional_field<int>(block, "shots", file.counting.shots);
    }
    if (doc.contains("commitment")) {
        const auto &block = doc.at("commitment");
        if (!block.is_object()) throw ArgumentError("\"commitment\" must be an object");
        file.code.expansion = optional_field<double>(block, "c", file.code.expansion);
        const auto family = optional_field<std::string>(block, "code", "random");
        if (family == "random") {
            file.code.family = CodeFamily::kRandom;
        } else if (family == "parity-repetition") {
            file.code.family = CodeFamily::kParityRepetition;
        } else {
            throw ArgumentError("unknown commitment code \"" + family + "\"");
        }
    }
    file.seed = optional_field<std::uint64_t>(doc, "seed", file.seed);
    file.counting.seed = file.seed;
    file.counting.validate();
    if (!(file.code.expansion > 1.0)) throw ArgumentError("commitment expansion c must exceed 1");
    return file;
}

std::string transcript_to_json(const NegotiationTranscript &tr, const JsonOptions &options) {
    json messages = json::array();
    for (const auto &m : tr.messages) {
        json msg = {{"step", m.step},
                    {"from", party_name(m.from)},
                    {"to", party_name(m.to)},
                    {"kind", m.kind == PayloadKind::kQuantum ? "quantum" : "classical"},
                    {"label", m.label},
                    {"qubits", m.qubit_cost},
                    {"cbits", m.cbit_cost},
                    {"fingerprint", m.fingerprint}};
        if (m.classical) msg["bits"] = m.classical->to_string();
        messages.push_back(std::move(msg));
    }

    json commitments = json::array();
    for (const auto &v : tr.verifications) {
        commitments.push_back({{"verifier", party_name(v.verifier)},
                               {"committed", v.committed.to_string()},
                               {"unveiled", v.unveiled.to_string()},
                               {"accepted", v.accepted},
                               {"accept_probability", v.accept_probability}});
    }

    json estimates = json::object();
    if (tr.count_a) estimates["alice"] = estimate_json(*tr.count_a);
    if (tr.count_b) estimates["bob"] = estimate_json(*tr.count_b);

    const CostSummary costs = transcript_costs(tr);
    json doc = {{"schema_version", kTranscriptSchemaVersion},
                {"scenario",
                 {{"N", tr.num_products}, {"epsilon", tr.threshold}, {"n", tr.index_bits}, {"d", tr.price_bits}}},
                {"params", {{"t", tr.precision_qubits}, {"m", tr.codeword_bits}, {"seed", tr.seed}}},
                {"messages", messages},
                {"estimates", estimates},
                {"commitments", commitments},
                {"t_A", tr.unveiled_a},
                {"t_B", tr.unveiled_b},
                {"delta", tr.delta},
                {"consistent", tr.consistent},
                {"trade", tr.trade},
                {"costs",
                 {{"qubits", costs.qubits}, {"cbits", costs.cbits}, {"fingerprint_qubits", costs.fingerprint_qubits}}}};

    if (tr.adversary) {
        json adv = {{"party", party_name(tr.adversary->party)},
                    {"behavior", behavior_name(tr.adversary->behavior)},
                    {"detected", tr.cheat_detected}};
        if (tr.learned) {
            adv["learned"] = {{"by", party_name(tr.learned->by)}, {"index", tr.learned->index}, {"price", tr.learned->price}};
        }
        doc["adversary"] = std::move(adv);
    }
    if (options.include_timings) {
        json timings = json::array();
        for (const auto &s : tr.timings) timings.push_back({{"step", s.step}, {"micros", s.micros}});
        doc["step_timings"] = std::move(timings);
    }
    return options.pretty ? doc.dump(2) : doc.dump();
}

}  // namespace q3pen
