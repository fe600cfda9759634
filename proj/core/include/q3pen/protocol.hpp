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
 * Two-party negotiation harness: the buyer (Alice) and the seller (Bob)
 * exchange oracle-loaded states, compare prices in superposition, count the
 * tradable products, commit to and unveil their counts, and decide.
 *
 * Every transfer goes through an in-process Channel that moves ownership of
 * the payload and logs its qubit/cbit cost. Adversarial behaviors can be
 * scripted for exactly one party.
 */

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "q3pen/circuits.hpp"
#include "q3pen/commitment.hpp"
#include "q3pen/counting.hpp"

namespace q3pen {

enum class PartyRole { kAlice, kBob };  // buyer, seller
enum class Behavior { kHonest, kMeasureAndCheat, kFalseUnveil };
enum class PayloadKind { kQuantum, kClassical };

std::string_view party_name(PartyRole role);
std::string_view behavior_name(Behavior behavior);
PartyRole peer_of(PartyRole role);

struct ChannelMessage {
    int step = 0;
    PartyRole from = PartyRole::kAlice;
    PartyRole to = PartyRole::kBob;
    PayloadKind kind = PayloadKind::kQuantum;
    std::string label;
    int qubit_cost = 0;
    int cbit_cost = 0;
    bool fingerprint = false;             // commitment fingerprint, reported apart from the headline cost
    std::optional<BitString> classical;   // classical payload, kept for auditing
};

/// Point-to-point channel that hands payloads over by move and keeps a cost log.
class Channel {
   public:
    using Payload = std::variant<StateVector, CommitmentRecord, BitString>;

    void send(int step, PartyRole from, std::string label, Payload payload);
    Payload receive(PartyRole to, std::string_view label);

    const std::vector<ChannelMessage> &log() const { return log_; }
    std::size_t pending() const { return in_flight_.size(); }

   private:
    struct InFlight {
        PartyRole to;
        std::string label;
        Payload payload;
    };
    std::vector<ChannelMessage> log_;
    std::deque<InFlight> in_flight_;
};

enum class CodeFamily { kRandom, kParityRepetition };

struct CodeSpec {
    double expansion = 2.0;  // c in m = ceil(c n)
    CodeFamily family = CodeFamily::kRandom;
};

/// The commitment code both parties agree on for n-bit counts.
LinearCode make_commitment_code(const CodeSpec &code, int message_bits, std::uint64_t seed);

struct Adversary {
    PartyRole party = PartyRole::kBob;
    Behavior behavior = Behavior::kHonest;
    std::optional<std::uint64_t> false_unveil_value;  // only with kFalseUnveil
};

/// What a measuring party learns: one index and the price stored beside it.
struct LearnedPair {
    PartyRole by = PartyRole::kBob;
    std::int64_t index = 0;
    std::int64_t price = 0;
};

struct VerificationRecord {
    PartyRole verifier = PartyRole::kAlice;
    BitString committed;
    BitString unveiled;
    bool accepted = false;
    double accept_probability = 0.0;
};

struct StepTiming {
    int step = 0;
    double micros = 0.0;
};

struct NegotiationTranscript {
    std::int64_t num_products = 0;
    std::int64_t threshold = 0;
    int index_bits = 0;
    int price_bits = 0;
    int precision_qubits = 0;
    int codeword_bits = 0;
    std::uint64_t seed = 0;

    std::vector<ChannelMessage> messages;
    std::optional<CountEstimate> count_a;  // Alice's count, from the state that started with Bob
    std::optional<CountEstimate> count_b;  // Bob's count, from the state that started with Alice
    std::int64_t unveiled_a = 0;
    std::int64_t unveiled_b = 0;
    std::vector<VerificationRecord> verifications;
    double delta = 0.0;
    bool consistent = false;
    bool trade = false;
    std::vector<StepTiming> timings;

    std::optional<Adversary> adversary;
    std::optional<LearnedPair> learned;
    bool cheat_detected = false;
    bool complete = false;
};

struct CostSummary {
    int qubits = 0;              // oracle-state transfers
    int cbits = 0;               // unveiled counts
    int fingerprint_qubits = 0;  // commitment fingerprints, outside the headline total
};

NegotiationTranscript run_negotiation(const PriceScenario &scenario, const CountingParams &counting,
                                      const CodeSpec &code, std::uint64_t master_seed);

struct AdversaryReport {
    NegotiationTranscript transcript;
    std::optional<LearnedPair> learned;
    bool detected = false;  // the honest party's commitment check rejected
};

AdversaryReport run_with_adversary(const PriceScenario &scenario, const Adversary &adversary,
                                   const CountingParams &counting, const CodeSpec &code, std::uint64_t master_seed);

/**
 * Steps 1-2 of the measurement attack alone: the victim loads its prices and
 * sends |phi'>, the attacker measures index and price registers.
 */
LearnedPair measurement_attack(const PriceScenario &scenario, PartyRole attacker, std::uint64_t seed);

CostSummary transcript_costs(const NegotiationTranscript &transcript);

}  // namespace q3pen
