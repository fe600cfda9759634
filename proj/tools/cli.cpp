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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "q3pen/analysis.hpp"
#include "q3pen/errors.hpp"
#include "q3pen/protocol.hpp"
#include "q3pen/serialization.hpp"

namespace q3pen::cli {
namespace {

struct RunOptions {
    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    int max_qubits = 20;
    std::optional<int> shots;
    std::optional<int> precision;
    std::optional<double> expansion;
    std::string adversary;
    bool pretty = false;
    bool timing = false;
};

struct CostOptions {
    int price_bits = 2;
    std::int64_t n_max = 16;
    bool split = false;
};

struct DetectOptions {
    double expansion = 2.0;
    int n_max = 10;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Adversary parse_adversary(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ArgumentError("--adversary expects <party>:<behavior>");
    const std::string party = text.substr(0, colon);
    const std::string behavior = text.substr(colon + 1);
    Adversary adv;
    if (party == "alice") {
        adv.party = PartyRole::kAlice;
    } else if (party == "bob") {
        adv.party = PartyRole::kBob;
    } else {
        throw ArgumentError("unknown party '" + party + "' (expected alice or bob)");
    }
    if (behavior == "honest") {
        adv.behavior = Behavior::kHonest;
    } else if (behavior == "measure-and-cheat") {
        adv.behavior = Behavior::kMeasureAndCheat;
    } else if (behavior == "false-unveil") {
        adv.behavior = Behavior::kFalseUnveil;
    } else {
        throw ArgumentError("unknown behavior '" + behavior +
                            "' (expected honest, measure-and-cheat or false-unveil)");
    }
    return adv;
}

void cmd_run(const RunOptions &opt, std::ostream &out) {
    ScenarioFile file = parse_scenario_json(read_file(opt.scenario_path));
    if (opt.seed) file.seed = *opt.seed;
    if (opt.shots) file.counting.shots = *opt.shots;
    if (opt.precision) file.counting.precision_qubits = *opt.precision;
    if (opt.expansion) file.code.expansion = *opt.expansion;
    if (!(file.code.expansion > 1.0)) throw ArgumentError("--c must exceed 1");
    file.counting.seed = file.seed;
    file.counting.max_qubits = opt.max_qubits;

    NegotiationTranscript transcript =
        opt.adversary.empty()
            ? run_negotiation(file.scenario, file.counting, file.code, file.seed)
            : run_with_adversary(file.scenario, parse_adversary(opt.adversary), file.counting, file.code, file.seed)
                  .transcript;
    out << transcript_to_json(transcript, {opt.pretty, opt.timing}) << '\n';
}

void cmd_costs(const CostOptions &opt, std::ostream &out) {
    if (opt.price_bits < 1) throw ArgumentError("--d must be at least 1");
    if (opt.n_max < 1) throw ArgumentError("--n-max must be at least 1");
    out << cost_table_csv(cost_table(1, opt.n_max, opt.price_bits), opt.split);
}

void cmd_detect(const DetectOptions &opt, std::ostream &out) {
    if (opt.n_max < 1) throw ArgumentError("--n-max must be at least 1");
    out << detection_curve_csv(detection_curve(opt.expansion, 1, opt.n_max));
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum private price negotiation simulator", "q3pen"};
    app.require_subcommand(1);

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Run one negotiation and print the transcript as JSON");
    run_cmd->add_option("scenario", run.scenario_path, "Scenario JSON file")->required();
    run_cmd->add_option("--seed", run.seed, "Master seed (overrides the file)");
    run_cmd->add_option("--max-qubits", run.max_qubits, "Qubit-capacity guard")->capture_default_str();
    run_cmd->add_option("--shots", run.shots, "Counting shots; the median is reported");
    run_cmd->add_option("--t", run.precision, "Phase-estimation precision qubits");
    run_cmd->add_option("--c", run.expansion, "Commitment code expansion");
    run_cmd->add_option("--adversary", run.adversary, "<alice|bob>:<honest|measure-and-cheat|false-unveil>");
    run_cmd->add_flag("--pretty", run.pretty, "Indent the JSON output");
    run_cmd->add_flag("--timing", run.timing, "Include per-step wall-clock timings");

    CostOptions costs;
    auto *costs_cmd = app.add_subcommand("costs", "Print the communication-cost table as CSV");
    costs_cmd->add_option("--d", costs.price_bits, "Price bits")->capture_default_str();
    costs_cmd->add_option("--n-max", costs.n_max, "Largest N")->capture_default_str();
    costs_cmd->add_flag("--split", costs.split, "Add separate qubit and cbit columns for Q3PEN");

    DetectOptions detect;
    auto *detect_cmd = app.add_subcommand("detect", "Print the cheat-detection curve as CSV");
    detect_cmd->add_option("--c", detect.expansion, "Code expansion c > 1")->capture_default_str();
    detect_cmd->add_option("--n-max", detect.n_max, "Largest message length")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "q3pen: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*run_cmd) cmd_run(run, out);
        if (*costs_cmd) cmd_costs(costs, out);
        if (*detect_cmd) cmd_detect(detect, out);
    } catch (const ResourceError &e) {
        err << "q3pen: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception &e) {
        err << "q3pen: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace q3pen::cli
