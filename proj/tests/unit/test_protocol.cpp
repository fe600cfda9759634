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

#include <map>
#include <random>

#include "q3pen/errors.hpp"
#include "q3pen/protocol.hpp"
#include "q3pen/serialization.hpp"

namespace q3pen {
namespace {

PriceScenario worked_example(std::int64_t eps = 5) {
    return PriceScenario({3, 2, 5, 4, 7, 6}, {2, 2, 5, 5, 6, 6}, eps);
}

CountingParams default_counting() {
    CountingParams p;
    p.precision_qubits = 6;
    p.shots = 11;
    return p;
}

TEST(Negotiation, WorkedExampleTrades) {
    const auto tr = run_negotiation(worked_example(), default_counting(), CodeSpec{}, 42);
    ASSERT_TRUE(tr.complete);
    ASSERT_TRUE(tr.count_a && tr.count_b);
    EXPECT_EQ(tr.unveiled_a, 5);
    EXPECT_EQ(tr.unveiled_b, 5);
    EXPECT_TRUE(tr.consistent);
    EXPECT_TRUE(tr.trade);
    ASSERT_EQ(tr.verifications.size(), 2U);
    for (const auto &v : tr.verifications) EXPECT_TRUE(v.accepted);
}

TEST(Negotiation, WorkedExampleWithHigherThresholdDoesNotTrade) {
    const auto tr = run_negotiation(worked_example(6), default_counting(), CodeSpec{}, 42);
    EXPECT_EQ(tr.unveiled_a, 5);
    EXPECT_EQ(tr.unveiled_b, 5);
    EXPECT_FALSE(tr.trade);
}

TEST(Negotiation, NothingMarkedGivesZeroCounts) {
    const PriceScenario sc({0, 1, 2, 3}, {1, 2, 3, 4}, 1);
    const auto tr = run_negotiation(sc, default_counting(), CodeSpec{}, 3);
    EXPECT_EQ(tr.unveiled_a, 0);
    EXPECT_EQ(tr.unveiled_b, 0);
    EXPECT_FALSE(tr.trade);
}

TEST(Negotiation, TradeMatchesClassicalVerdictOnSmallScenarios) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<std::int64_t>(1 + rng() % 3);
        std::vector<std::int64_t> a, b;
        for (std::int64_t i = 0; i < n; ++i) {
            a.push_back(static_cast<std::int64_t>(rng() % 2));
            b.push_back(static_cast<std::int64_t>(rng() % 2));
        }
        const auto eps = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(n));
        const PriceScenario sc(a, b, eps);
        CountingParams params = default_counting();
        params.max_qubits = 14;
        params.precision_qubits = 1;
        while (error_bound(params.precision_qubits, n, n) >= 0.5) ++params.precision_qubits;
        std::int64_t brute = 0;
        for (std::size_t i = 0; i < a.size(); ++i) brute += classical_f(a[i], b[i]);

        const auto tr = run_negotiation(sc, params, CodeSpec{}, static_cast<std::uint64_t>(trial));
        EXPECT_EQ(tr.unveiled_a, brute) << "trial " << trial;
        EXPECT_EQ(tr.unveiled_b, brute) << "trial " << trial;
        EXPECT_EQ(tr.trade, brute >= eps) << "trial " << trial;
    }
}

TEST(Negotiation, PartiesAgreeAcrossSeeds) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto tr = run_negotiation(worked_example(), default_counting(), CodeSpec{}, seed);
        EXPECT_TRUE(tr.consistent) << "seed " << seed;
        EXPECT_LE(std::abs(tr.unveiled_a - tr.unveiled_b), tr.delta);
    }
}

TEST(Negotiation, DeterministicPerSeed) {
    const auto x = run_negotiation(worked_example(), default_counting(), CodeSpec{}, 7);
    const auto y = run_negotiation(worked_example(), default_counting(), CodeSpec{}, 7);
    EXPECT_EQ(transcript_to_json(x), transcript_to_json(y));
}

TEST(Negotiation, CapacityExceededThrows) {
    CountingParams params = default_counting();
    params.max_qubits = 16;
    EXPECT_THROW(run_negotiation(worked_example(), params, CodeSpec{}, 1), ResourceError);
}

TEST(Negotiation, OnlyClassicalPayloadsAreTheTwoCounts) {
    const auto sc = worked_example();
    const auto tr = run_negotiation(sc, default_counting(), CodeSpec{}, 11);
    int classical = 0;
    for (const auto &m : tr.messages) {
        if (m.kind != PayloadKind::kClassical) {
            EXPECT_EQ(m.cbit_cost, 0);
            EXPECT_FALSE(m.classical.has_value());
            continue;
        }
        ++classical;
        ASSERT_TRUE(m.classical.has_value());
        EXPECT_EQ(m.cbit_cost, sc.index_width());
        EXPECT_EQ(m.classical->length, sc.index_width());
        EXPECT_EQ(m.step, 5);
        const auto expected = m.from == PartyRole::kAlice ? tr.unveiled_a : tr.unveiled_b;
        EXPECT_EQ(static_cast<std::int64_t>(m.classical->bits), expected);
        EXPECT_TRUE(m.label == "t_A" || m.label == "t_B");
    }
    EXPECT_EQ(classical, 2);
}

TEST(Negotiation, MessageLogFollowsSteps) {
    const auto tr = run_negotiation(worked_example(), default_counting(), CodeSpec{}, 11);
    ASSERT_EQ(tr.messages.size(), 6U);
    EXPECT_EQ(tr.messages[0].step, 1);
    EXPECT_EQ(tr.messages[0].qubit_cost, 6);
    EXPECT_EQ(tr.messages[1].step, 1);
    EXPECT_NE(tr.messages[0].from, tr.messages[1].from);
    for (std::size_t k = 2; k < 6; ++k) EXPECT_EQ(tr.messages[k].step, 5);
    int last = 0;
    for (const auto &t : tr.timings) {
        EXPECT_GT(t.step, last);
        EXPECT_GE(t.micros, 0.0);
        last = t.step;
    }
    EXPECT_EQ(last, 6);
}

TEST(Costs, WorkedExampleHeadline) {
    const auto tr = run_negotiation(worked_example(), default_counting(), CodeSpec{}, 42);
    const auto c = transcript_costs(tr);
    EXPECT_EQ(c.qubits, 12);
    EXPECT_EQ(c.cbits, 6);
    EXPECT_EQ(c.fingerprint_qubits, 2 * 3);
}

TEST(Costs, SmallestScenario) {
    const PriceScenario sc({1}, {0}, 1);
    ASSERT_EQ(sc.index_width(), 1);
    ASSERT_EQ(sc.price_width(), 1);
    const auto c = transcript_costs(run_negotiation(sc, default_counting(), CodeSpec{}, 1));
    EXPECT_EQ(c.qubits, 4);
    EXPECT_EQ(c.cbits, 2);
}

TEST(Costs, WiderPricesAddTwoQubitsPerBit) {
    const PriceScenario narrow({1, 0, 1}, {0, 1, 1}, 1);
    const PriceScenario wide({3, 0, 1}, {0, 1, 1}, 1);
    ASSERT_EQ(wide.price_width() - narrow.price_width(), 1);
    const auto cn = transcript_costs(run_negotiation(narrow, default_counting(), CodeSpec{}, 1));
    const auto cw = transcript_costs(run_negotiation(wide, default_counting(), CodeSpec{}, 1));
    EXPECT_EQ(cw.qubits - cn.qubits, 2);
    EXPECT_EQ(cw.cbits, cn.cbits);
}

TEST(Costs, IncompleteTranscriptThrows) {
    EXPECT_THROW(transcript_costs(NegotiationTranscript{}), StateError);
}

TEST(Adversary, MeasurementAttackLearnsOnePair) {
    const auto sc = worked_example();
    std::map<std::int64_t, int> freq;
    const int trials = 6000;
    for (int k = 0; k < trials; ++k) {
        const auto learned = measurement_attack(sc, PartyRole::kBob, static_cast<std::uint64_t>(k));
        ASSERT_GE(learned.index, 1);
        ASSERT_LE(learned.index, 6);
        ASSERT_EQ(learned.price, sc.buyer_prices()[static_cast<std::size_t>(learned.index - 1)]);
        ++freq[learned.index];
    }
    for (const auto &[i, c] : freq) EXPECT_NEAR(static_cast<double>(c) / trials, 1.0 / 6.0, 0.02) << "i=" << i;
}

TEST(Adversary, AliceAttackLearnsSellerPrice) {
    const auto sc = worked_example();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto learned = measurement_attack(sc, PartyRole::kAlice, seed);
        EXPECT_EQ(learned.by, PartyRole::kAlice);
        EXPECT_EQ(learned.price, sc.seller_prices()[static_cast<std::size_t>(learned.index - 1)]);
    }
}

TEST(Adversary, MeasureAndCheatRecordsPairInTranscript) {
    const auto sc = worked_example();
    const auto report =
        run_with_adversary(sc, Adversary{PartyRole::kBob, Behavior::kMeasureAndCheat, std::nullopt},
                           default_counting(), CodeSpec{}, 5);
    ASSERT_TRUE(report.learned.has_value());
    EXPECT_EQ(report.learned->by, PartyRole::kBob);
    EXPECT_EQ(report.learned->price, sc.buyer_prices()[static_cast<std::size_t>(report.learned->index - 1)]);
    EXPECT_TRUE(report.transcript.complete);
    // Bob echoes Alice's unveiled count.
    EXPECT_EQ(report.transcript.unveiled_b, report.transcript.unveiled_a);
}

TEST(Adversary, FalseUnveilDetectionRateMatchesOverlap) {
    const PriceScenario sc({1, 0, 1}, {0, 0, 1}, 1);
    const int trials = 5000;
    int detected = 0;
    double expected = 0.0;
    for (int k = 0; k < trials; ++k) {
        const auto report = run_with_adversary(sc, Adversary{PartyRole::kBob, Behavior::kFalseUnveil, std::nullopt},
                                               default_counting(), CodeSpec{},
                                               static_cast<std::uint64_t>(k));
        const auto &tr = report.transcript;
        const VerificationRecord *at_alice = nullptr;
        for (const auto &v : tr.verifications) {
            if (v.verifier == PartyRole::kAlice) at_alice = &v;
        }
        ASSERT_NE(at_alice, nullptr);
        ASSERT_NE(at_alice->committed.bits, at_alice->unveiled.bits);
        // The commitment code is drawn from stream 3 of the master seed.
        const auto code = make_commitment_code(CodeSpec{}, tr.index_bits,
                                               derive_seed(static_cast<std::uint64_t>(k), 3));
        expected += 1.0 - acceptance_probability(code, at_alice->committed, at_alice->unveiled);
        detected += report.detected ? 1 : 0;
    }
    EXPECT_NEAR(static_cast<double>(detected) / trials, expected / trials, 0.02);
}

TEST(Adversary, ExplicitFalseValueIsUnveiled) {
    const auto report = run_with_adversary(worked_example(),
                                           Adversary{PartyRole::kAlice, Behavior::kFalseUnveil, 2},
                                           default_counting(), CodeSpec{}, 1);
    EXPECT_EQ(report.transcript.unveiled_a, 2);
    EXPECT_FALSE(report.transcript.consistent);
    EXPECT_FALSE(report.transcript.trade);
}

TEST(Adversary, HonestScriptMatchesHonestRun) {
    const auto honest = run_negotiation(worked_example(), default_counting(), CodeSpec{}, 42);
    const auto report = run_with_adversary(worked_example(), Adversary{PartyRole::kBob, Behavior::kHonest, std::nullopt},
                                           default_counting(), CodeSpec{}, 42);
    EXPECT_FALSE(report.detected);
    EXPECT_FALSE(report.learned.has_value());
    EXPECT_EQ(report.transcript.trade, honest.trade);
    EXPECT_EQ(report.transcript.unveiled_a, honest.unveiled_a);
    EXPECT_EQ(report.transcript.unveiled_b, honest.unveiled_b);
}

TEST(Adversary, ConflictingScriptsAreRejected) {
    EXPECT_THROW(run_with_adversary(worked_example(), Adversary{PartyRole::kBob, Behavior::kMeasureAndCheat, 1},
                                    default_counting(), CodeSpec{}, 1),
                 ArgumentError);
    EXPECT_THROW(run_with_adversary(worked_example(), Adversary{PartyRole::kBob, Behavior::kFalseUnveil, 8},
                                    default_counting(), CodeSpec{}, 1),
                 ArgumentError);
}

TEST(Channel, DeliversByLabelAndLogsCosts) {
    Channel ch;
    ch.send(1, PartyRole::kAlice, "state", prepare_basis(4, 3));
    ch.send(5, PartyRole::kBob, "bits", BitString::from_value(2, 3));
    EXPECT_EQ(ch.pending(), 2U);
    EXPECT_THROW(ch.receive(PartyRole::kAlice, "state"), StateError);
    const auto s = std::get<StateVector>(ch.receive(PartyRole::kBob, "state"));
    EXPECT_EQ(s.num_qubits(), 4);
    const auto b = std::get<BitString>(ch.receive(PartyRole::kAlice, "bits"));
    EXPECT_EQ(b.bits, 2U);
    EXPECT_EQ(ch.pending(), 0U);
    ASSERT_EQ(ch.log().size(), 2U);
    EXPECT_EQ(ch.log()[0].qubit_cost, 4);
    EXPECT_EQ(ch.log()[0].kind, PayloadKind::kQuantum);
    EXPECT_EQ(ch.log()[1].cbit_cost, 3);
    EXPECT_EQ(ch.log()[1].kind, PayloadKind::kClassical);
}

}  // namespace
}  // namespace q3pen
