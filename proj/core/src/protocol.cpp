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

#include "q3pen/protocol.hpp"

#include <chrono>
#include <cstdlib>
#include <string>

#include "q3pen/errors.hpp"

namespace q3pen {

std::string_view party_name(PartyRole role) { return role == PartyRole::kAlice ? "alice" : "bob"; }

std::string_view behavior_name(Behavior behavior) {
    switch (behavior) {
        case Behavior::kHonest:
            return "honest";
        case Behavior::kMeasureAndCheat:
            return "measure-and-cheat";
        case Behavior::kFalseUnveil:
            return "false-unveil";
    }
    return "?";
}

PartyRole peer_of(PartyRole role) { return role == PartyRole::kAlice ? PartyRole::kBob : PartyRole::kAlice; }

// ---------------------------------------------------------------------------
// Channel

void Channel::send(int step, PartyRole from, std::string label, Payload payload) {
    ChannelMessage msg;
    msg.step = step;
    msg.from = from;
    msg.to = peer_of(from);
    msg.label = label;
    if (const auto *state = std::get_if<StateVector>(&payload)) {
        msg.kind = PayloadKind::kQuantum;
        msg.qubit_cost = state->num_qubits();
    } else if (const auto *record = std::get_if<CommitmentRecord>(&payload)) {
        msg.kind = PayloadKind::kQuantum;
        msg.qubit_cost = record->fingerprint().num_qubits();
        msg.fingerprint = true;
    } else {
        const auto &bits = std::get<BitString>(payload);
        msg.kind = PayloadKind::kClassical;
        msg.cbit_cost = bits.length;
        msg.classical = bits;
    }
    log_.push_back(std::move(msg));
    in_flight_.push_back({peer_of(from), std::move(label), std::move(payload)});
}

Channel::Payload Channel::receive(PartyRole to, std::string_view label) {
    for (auto it = in_flight_.begin(); it != in_flight_.end(); ++it) {
        if (it->to == to && it->label == label) {
            Payload payload = std::move(it->payload);
            in_flight_.erase(it);
            return payload;
        }
    }
    throw StateError("no message '" + std::string(label) + "' waiting for " + std::string(party_name(to)));
}

// ---------------------------------------------------------------------------

LinearCode make_commitment_code(const CodeSpec &code, int message_bits, std::uint64_t seed) {
    switch (code.family) {
        case CodeFamily::kRandom:
            return LinearCode::random(message_bits, code.expansion, seed);
        case CodeFamily::kParityRepetition:
            return LinearCode::parity_repetition(message_bits, code.expansion);
    }
    throw ArgumentError("unknown code family");
}

namespace {

enum SeedStream : std::uint64_t {
    kCountAlice = 1,
    kCountBob = 2,
    kCode = 3,
    kVerifyAlice = 4,
    kVerifyBob = 5,
    kAttack = 6,
};

/// One side of the negotiation. Only its own prices are visible to it; the
/// peer contributes its oracle as an opaque circuit.
struct Party {
    PartyRole role;
    std::vector<std::int64_t> prices;
    Behavior behavior = Behavior::kHonest;
    std::optional<std::uint64_t> false_unveil_value;

    Register own_register() const { return role == PartyRole::kAlice ? Register::kPriceA : Register::kPriceB; }
    RegisterOrder order() const {
        // The state a party holds started with its peer, so the peer's prices sit right above the index.
        return role == PartyRole::kBob ? RegisterOrder::kSellerHolds : RegisterOrder::kBuyerHolds;
    }
    Circuit oracle(const RegisterLayout &layout) const { return build_price_oracle(prices, layout, own_register()); }
};

class StepClock {
   public:
    explicit StepClock(std::vector<StepTiming> &out) : out_(out) {}
    void mark(int step) {
        const auto now = std::chrono::steady_clock::now();
        out_.push_back({step, std::chrono::duration<double, std::micro>(now - last_).count()});
        last_ = now;
    }

   private:
    std::vector<StepTiming> &out_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

StateVector load_prices(const Party &party, std::int64_t num_products, int n, int d) {
    RegisterLayout small;
    small.append(Register::kIndex, n).append(party.own_register(), d);
    std::vector<Amplitude> amps(std::size_t{1} << (n + d), Amplitude{0.0, 0.0});
    const auto index = uniform_index_amplitudes(num_products, n);
    for (std::size_t i = 0; i < index.size(); ++i) amps[i] = index[i];
    StateVector state = prepare_amplitudes(n + d, std::move(amps));
    party.oracle(small).apply(state);
    return state;
}

LearnedPair measure_received(StateVector &state, PartyRole by, int n, int d, std::uint64_t seed) {
    auto result = measure(state, Segment{0, n + d}, seed);
    state = std::move(result.collapsed);
    const Segment index{0, n};
    const Segment price{n, d};
    return LearnedPair{by, static_cast<std::int64_t>(index.extract(result.outcome)),
                       static_cast<std::int64_t>(price.extract(result.outcome))};
}

NegotiationTranscript execute(const PriceScenario &scenario, const CountingParams &counting, const CodeSpec &code_spec,
                              std::uint64_t master_seed, const std::optional<Adversary> &adversary) {
    counting.validate();
    const std::int64_t num_products = scenario.num_products();
    const int n = scenario.index_width();
    const int d = scenario.price_width();
    const int t = counting.precision_qubits;

    Party alice{PartyRole::kAlice, {scenario.buyer_prices().begin(), scenario.buyer_prices().end()}, Behavior::kHonest, std::nullopt};
    Party bob{PartyRole::kBob, {scenario.seller_prices().begin(), scenario.seller_prices().end()}, Behavior::kHonest, std::nullopt};
    if (adversary) {
        if (adversary->false_unveil_value && adversary->behavior != Behavior::kFalseUnveil) {
            throw ArgumentError("a false-unveil value only applies to the false-unveil behavior");
        }
        if (adversary->false_unveil_value && (*adversary->false_unveil_value >> n) != 0) {
            throw ArgumentError("false-unveil value does not fit in the " + std::to_string(n) + "-bit count");
        }
        Party &cheater = adversary->party == PartyRole::kAlice ? alice : bob;
        cheater.behavior = adversary->behavior;
        cheater.false_unveil_value = adversary->false_unveil_value;
    }

    const RegisterLayout bob_layout = negotiation_layout(scenario, bob.order());
    const RegisterLayout alice_layout = negotiation_layout(scenario, alice.order());
    if (bob_layout.num_qubits() + t > counting.max_qubits) {
        throw ResourceError("negotiation needs " + std::to_string(bob_layout.num_qubits() + t) +
                            " simulated qubits, capacity is " + std::to_string(counting.max_qubits));
    }

    NegotiationTranscript tr;
    tr.num_products = num_products;
    tr.threshold = scenario.threshold();
    tr.index_bits = n;
    tr.price_bits = d;
    tr.precision_qubits = t;
    tr.seed = master_seed;
    tr.adversary = adversary;

    Channel channel;
    StepClock clock(tr.timings);

    // Step 1: load prices, swap states.
    channel.send(1, PartyRole::kAlice, "phi_prime_A", load_prices(alice, num_products, n, d));
    channel.send(1, PartyRole::kBob, "phi_prime_B", load_prices(bob, num_products, n, d));
    clock.mark(1);

    // Step 2: each party loads its own prices into the received state.
    auto held_by_bob = std::get<StateVector>(channel.receive(PartyRole::kBob, "phi_prime_A"));
    auto held_by_alice = std::get<StateVector>(channel.receive(PartyRole::kAlice, "phi_prime_B"));
    for (Party *p : {&alice, &bob}) {
        if (p->behavior != Behavior::kMeasureAndCheat) continue;
        StateVector &held = p->role == PartyRole::kBob ? held_by_bob : held_by_alice;
        tr.learned = measure_received(held, p->role, n, d, derive_seed(master_seed, kAttack));
    }
    const int extra = bob_layout.num_qubits() - (n + d);
    held_by_bob.extend(extra);
    held_by_alice.extend(extra);
    bob.oracle(bob_layout).apply(held_by_bob);
    alice.oracle(alice_layout).apply(held_by_alice);
    clock.mark(2);

    // Step 3: comparator flag.
    build_flag_oracle(bob_layout).apply(held_by_bob);
    build_flag_oracle(alice_layout).apply(held_by_alice);
    clock.mark(3);

    // Step 4: independent quantum counts. The peer's oracle enters only as a black box.
    const auto count_on = [&](const Party &self, const Party &peer, const RegisterLayout &layout,
                              const StateVector &held, std::uint64_t stream) {
        const Party &buyer = self.role == PartyRole::kAlice ? self : peer;
        const Party &seller = self.role == PartyRole::kBob ? self : peer;
        auto grover = build_grover_iterate(
            make_negotiation_prep(num_products, layout, buyer.oracle(layout), seller.oracle(layout)), layout.work(),
            layout.segment(Register::kFlag).offset);
        CountingParams params = counting;
        params.seed = derive_seed(master_seed, stream);
        return estimate_count(grover, held, num_products, params);
    };
    tr.count_b = count_on(bob, alice, bob_layout, held_by_bob, kCountBob);
    tr.count_a = count_on(alice, bob, alice_layout, held_by_alice, kCountAlice);
    clock.mark(4);

    // Step 5: commit, unveil, verify, cross-check.
    const LinearCode code = make_commitment_code(code_spec, n, derive_seed(master_seed, kCode));
    tr.codeword_bits = code.codeword_bits();
    const BitString committed_a = BitString::from_value(static_cast<std::uint64_t>(tr.count_a->m_hat), n);
    const BitString committed_b = BitString::from_value(static_cast<std::uint64_t>(tr.count_b->m_hat), n);
    channel.send(5, PartyRole::kAlice, "tau_A", commit(committed_a, code));
    channel.send(5, PartyRole::kBob, "tau_B", commit(committed_b, code));
    auto record_at_bob = std::get<CommitmentRecord>(channel.receive(PartyRole::kBob, "tau_A"));
    auto record_at_alice = std::get<CommitmentRecord>(channel.receive(PartyRole::kAlice, "tau_B"));

    // A dishonest party unveils second so it can react to the honest value.
    const PartyRole first = (adversary && adversary->behavior != Behavior::kHonest)
                                ? peer_of(adversary->party)
                                : PartyRole::kAlice;
    const auto claim_for = [&](const Party &p, const BitString &own, std::optional<BitString> seen) {
        switch (p.behavior) {
            case Behavior::kHonest:
                return own;
            case Behavior::kMeasureAndCheat:
                // Its own count is spoiled by the measurement; echo the peer's.
                return seen ? *seen : own;
            case Behavior::kFalseUnveil: {
                const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
                return BitString::from_value(p.false_unveil_value.value_or((own.bits + 1) & mask), n);
            }
        }
        return own;
    };
    std::optional<BitString> unveiled_a;
    std::optional<BitString> unveiled_b;
    for (PartyRole role : {first, peer_of(first)}) {
        if (role == PartyRole::kAlice) {
            unveiled_a = claim_for(alice, committed_a, unveiled_b);
            channel.send(5, PartyRole::kAlice, "t_A", *unveiled_a);
        } else {
            unveiled_b = claim_for(bob, committed_b, unveiled_a);
            channel.send(5, PartyRole::kBob, "t_B", *unveiled_b);
        }
    }
    const auto heard_by_bob = std::get<BitString>(channel.receive(PartyRole::kBob, "t_A"));
    const auto heard_by_alice = std::get<BitString>(channel.receive(PartyRole::kAlice, "t_B"));

    const auto check = [](PartyRole verifier, CommitmentRecord &record, const BitString &claim,
                          const BitString &committed, std::uint64_t seed) {
        VerificationRecord v;
        v.verifier = verifier;
        v.committed = committed;
        v.unveiled = claim;
        v.accepted = verify(record, claim, seed);
        v.accept_probability = record.accept_probability().value_or(0.0);
        return v;
    };
    tr.verifications.push_back(
        check(PartyRole::kAlice, record_at_alice, heard_by_alice, committed_b, derive_seed(master_seed, kVerifyAlice)));
    tr.verifications.push_back(
        check(PartyRole::kBob, record_at_bob, heard_by_bob, committed_a, derive_seed(master_seed, kVerifyBob)));

    tr.unveiled_a = static_cast<std::int64_t>(heard_by_bob.bits);
    tr.unveiled_b = static_cast<std::int64_t>(heard_by_alice.bits);
    tr.delta = std::max(tr.count_a->delta, tr.count_b->delta);
    tr.consistent = static_cast<double>(std::llabs(tr.unveiled_a - tr.unveiled_b)) <= tr.delta;
    clock.mark(5);

    // Step 6: decision.
    const bool all_verified = tr.verifications[0].accepted && tr.verifications[1].accepted;
    tr.trade = all_verified && tr.consistent && tr.unveiled_a >= scenario.threshold() &&
               tr.unveiled_b >= scenario.threshold();
    if (adversary && adversary->behavior != Behavior::kHonest) {
        const PartyRole honest = peer_of(adversary->party);
        for (const auto &v : tr.verifications) {
            if (v.verifier == honest && !v.accepted) tr.cheat_detected = true;
        }
    }
    clock.mark(6);

    tr.messages = channel.log();
    tr.complete = channel.pending() == 0;
    return tr;
}

}  // namespace

NegotiationTranscript run_negotiation(const PriceScenario &scenario, const CountingParams &counting,
                                      const CodeSpec &code, std::uint64_t master_seed) {
    return execute(scenario, counting, code, master_seed, std::nullopt);
}

AdversaryReport run_with_adversary(const PriceScenario &scenario, const Adversary &adversary,
                                   const CountingParams &counting, const CodeSpec &code, std::uint64_t master_seed) {
    AdversaryReport report;
    report.transcript = execute(scenario, counting, code, master_seed, adversary);
    report.learned = report.transcript.learned;
    report.detected = report.transcript.cheat_detected;
    return report;
}

LearnedPair measurement_attack(const PriceScenario &scenario, PartyRole attacker, std::uint64_t seed) {
    const PartyRole victim_role = peer_of(attacker);
    Party victim{victim_role, victim_role == PartyRole::kAlice
                                  ? std::vector<std::int64_t>(scenario.buyer_prices().begin(), scenario.buyer_prices().end())
                                  : std::vector<std::int64_t>(scenario.seller_prices().begin(), scenario.seller_prices().end()), Behavior::kHonest, std::nullopt};
    const int n = scenario.index_width();
    const int d = scenario.price_width();
    Channel channel;
    channel.send(1, victim_role, "phi_prime", load_prices(victim, scenario.num_products(), n, d));
    auto received = std::get<StateVector>(channel.receive(attacker, "phi_prime"));
    return measure_received(received, attacker, n, d, seed);
}

CostSummary transcript_costs(const NegotiationTranscript &transcript) {
    if (!transcript.complete) throw StateError("transcript is incomplete");
    CostSummary costs;
    for (const auto &msg : transcript.messages) {
        if (msg.fingerprint) {
            costs.fingerprint_qubits += msg.qubit_cost;
        } else {
            costs.qubits += msg.qubit_cost;
        }
        costs.cbits += msg.cbit_cost;
    }
    return costs;
}

}  // namespace q3pen
