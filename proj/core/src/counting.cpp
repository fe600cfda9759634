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

#include "q3pen/counting.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <string>

#include "q3pen/errors.hpp"

namespace q3pen {

namespace {
constexpr double kPi = std::numbers::pi;
}

void CountingParams::validate() const {
    if (precision_qubits < 1) throw ArgumentError("counting needs at least one precision qubit");
    if (shots < 1) throw ArgumentError("counting needs at least one shot");
    if (max_qubits < 1) throw ArgumentError("qubit capacity must be positive");
}

StatePrep::StatePrep(int num_qubits, Action forward, Action inverse)
    : num_qubits_(num_qubits), forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (!forward_) throw ConstructionError("state preparation needs a forward action");
}

void StatePrep::apply_inverse(StateVector &state) const {
    if (!inverse_) throw ConstructionError("state preparation has no inverse realization");
    inverse_(state);
}

StatePrep make_negotiation_prep(const PriceScenario &scenario, const RegisterLayout &layout) {
    return make_negotiation_prep(scenario.num_products(), layout,
                                 build_price_oracle(scenario.buyer_prices(), layout, Register::kPriceA),
                                 build_price_oracle(scenario.seller_prices(), layout, Register::kPriceB));
}

StatePrep make_negotiation_prep(std::int64_t num_products, const RegisterLayout &layout, const Circuit &buyer_oracle,
                                const Circuit &seller_oracle) {
    const Segment index = layout.segment(Register::kIndex);

    // Householder axis (|0> - |u>)/sqrt(2): the reflection swaps |0> and |u> since <0|u> = 0.
    auto axis = uniform_index_amplitudes(num_products, index.width);
    for (auto &a : axis) a = -a / std::numbers::sqrt2;
    axis[0] = 1.0 / std::numbers::sqrt2;

    auto oracles = std::make_shared<Circuit>(layout);
    oracles->extend(buyer_oracle);
    oracles->extend(seller_oracle);
    oracles->extend(build_flag_oracle(layout));
    auto undo = std::make_shared<Circuit>(oracles->inverse());
    auto shared_axis = std::make_shared<const std::vector<Amplitude>>(std::move(axis));

    return StatePrep(
        layout.work().width,
        [=](StateVector &s) {
            s.reflect(index, *shared_axis);
            oracles->apply(s);
        },
        [=](StateVector &s) {
            undo->apply(s);
            s.reflect(index, *shared_axis);
        });
}

void GroverIterate::apply(StateVector &state, std::optional<int> control) const {
    const auto with = [&](std::vector<Control> controls) {
        if (control) controls.push_back(on_one(*control));
        return controls;
    };

    // S_f
    state.apply(Gate::Phase(flag_, kPi, with({})));

    prep_.apply_inverse(state);
    // S_0 on the work register: sign flip of |0...0>.
    const int pivot = work_.qubit(0);
    std::vector<Control> zeros;
    for (int j = 1; j < work_.width; ++j) zeros.push_back(on_zero(work_.qubit(j)));
    state.apply(Gate::Not(pivot));
    state.apply(Gate::Phase(pivot, kPi, with(std::move(zeros))));
    state.apply(Gate::Not(pivot));
    prep_.apply(state);
}

GroverIterate build_grover_iterate(StatePrep prep, Segment work, int flag_qubit) {
    if (!prep.has_inverse()) throw ConstructionError("Grover iterate needs an inverse of the state preparation");
    if (work.width < 1 || work.offset != 0 || work.width != prep.num_qubits()) {
        throw ConstructionError("work segment must start at qubit 0 and match the preparation width");
    }
    if (flag_qubit < work.offset || flag_qubit >= work.end()) {
        throw ConstructionError("flag qubit must lie inside the work register");
    }
    StateVector probe(work.width);
    prep.apply(probe);
    prep.apply_inverse(probe);
    if (std::abs(probe.amplitude(0) - 1.0) > 1e-9) {
        throw ConstructionError("state preparation inverse does not undo the forward action");
    }
    return GroverIterate(std::move(prep), work, flag_qubit);
}

// ---------------------------------------------------------------------------

namespace {

void append_swap(std::vector<Gate> &gates, int p, int q) {
    gates.push_back(Gate::Not(q, {on_one(p)}));
    gates.push_back(Gate::Not(p, {on_one(q)}));
    gates.push_back(Gate::Not(q, {on_one(p)}));
}

}  // namespace

std::vector<Gate> qft_gates(Segment segment) {
    std::vector<Gate> gates;
    for (int j = segment.width - 1; j >= 0; --j) {
        gates.push_back(Gate::Hadamard(segment.qubit(j)));
        for (int k = j - 1; k >= 0; --k) {
            gates.push_back(Gate::Phase(segment.qubit(j), kPi / std::ldexp(1.0, j - k), {on_one(segment.qubit(k))}));
        }
    }
    for (int j = 0; j < segment.width / 2; ++j) append_swap(gates, segment.qubit(j), segment.qubit(segment.width - 1 - j));
    return gates;
}

std::vector<Gate> inverse_qft_gates(Segment segment) {
    auto forward = qft_gates(segment);
    std::vector<Gate> gates;
    gates.reserve(forward.size());
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) gates.push_back(it->inverse());
    return gates;
}

namespace {

void check_phase_estimation_args(const GroverIterate &grover, const StateVector &prepared, int precision_qubits) {
    if (precision_qubits < 1) throw ArgumentError("phase estimation needs at least one precision qubit");
    if (precision_qubits > 24) throw ArgumentError("phase estimation precision above 24 qubits is not supported");
    if (prepared.num_qubits() != grover.work().width) {
        throw ArgumentError("prepared state does not match the Grover work register");
    }
}

}  // namespace

std::vector<double> phase_estimation_distribution(const GroverIterate &grover, const StateVector &prepared,
                                                  int precision_qubits) {
    check_phase_estimation_args(grover, prepared, precision_qubits);
    // After the Hadamards and the controlled powers the joint state is
    // 2^{-t/2} sum_c |c> Q^c |psi>, so the powers are computed on the work
    // register alone and written into their counting slots.
    const int w = prepared.num_qubits();
    const std::size_t slots = std::size_t{1} << precision_qubits;
    const std::size_t block = prepared.dimension();
    StateVector joint(w + precision_qubits);
    auto out = joint.mutable_amplitudes();
    const double scale = 1.0 / std::sqrt(static_cast<double>(slots));

    StateVector power = prepared;
    for (std::size_t c = 0; c < slots; ++c) {
        if (c > 0) grover.apply(power);
        const auto in = power.amplitudes();
        for (std::size_t x = 0; x < block; ++x) out[c * block + x] = scale * in[x];
    }
    const Segment counting{w, precision_qubits};
    for (const auto &g : inverse_qft_gates(counting)) joint.apply(g);
    return joint.marginal(counting);
}

std::vector<double> phase_estimation_circuit_distribution(const GroverIterate &grover, const StateVector &prepared,
                                                          int precision_qubits) {
    check_phase_estimation_args(grover, prepared, precision_qubits);
    StateVector state = prepared;
    state.extend(precision_qubits);
    const Segment counting{grover.work().width, precision_qubits};

    for (int j = 0; j < precision_qubits; ++j) state.apply(Gate::Hadamard(counting.qubit(j)));
    for (int j = 0; j < precision_qubits; ++j) {
        const std::uint64_t reps = std::uint64_t{1} << j;
        for (std::uint64_t r = 0; r < reps; ++r) grover.apply(state, counting.qubit(j));
    }
    for (const auto &g : inverse_qft_gates(counting)) state.apply(g);
    return state.marginal(counting);
}

double outcome_to_theta(std::uint64_t outcome, int precision_qubits) {
    const double phase = 2.0 * kPi * static_cast<double>(outcome) / std::ldexp(1.0, precision_qubits);
    return std::abs(phase - kPi);
}

std::int64_t outcome_to_count(std::uint64_t outcome, int precision_qubits, std::int64_t num_items) {
    const double half = outcome_to_theta(outcome, precision_qubits) / 2.0;
    const double raw = static_cast<double>(num_items) * std::sin(half) * std::sin(half);
    return std::clamp<std::int64_t>(std::llround(raw), 0, num_items);
}

double error_bound(int precision_qubits, std::int64_t num_items, std::int64_t m_hat) {
    if (precision_qubits < 1) throw ArgumentError("error bound needs t >= 1");
    const double scale = std::ldexp(1.0, -precision_qubits);
    const double n = static_cast<double>(num_items);
    const double m = static_cast<double>(std::max<std::int64_t>(m_hat, 0));
    return 2.0 * kPi * std::sqrt(m * n) * scale + kPi * kPi * n * scale * scale;
}

CountEstimate estimate_count(const GroverIterate &grover, const StateVector &prepared, std::int64_t num_items,
                             const CountingParams &params) {
    params.validate();
    const int total = prepared.num_qubits() + params.precision_qubits;
    if (total > params.max_qubits) {
        throw ResourceError("counting needs " + std::to_string(total) + " qubits, capacity is " +
                            std::to_string(params.max_qubits));
    }
    const auto probs = phase_estimation_distribution(grover, prepared, params.precision_qubits);

    CountEstimate estimate;
    estimate.shots.reserve(static_cast<std::size_t>(params.shots));
    for (int s = 0; s < params.shots; ++s) {
        std::mt19937_64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(s)));
        ShotResult shot;
        shot.outcome = sample_index(probs, uniform01(rng));
        shot.theta = outcome_to_theta(shot.outcome, params.precision_qubits);
        shot.m_hat = outcome_to_count(shot.outcome, params.precision_qubits, num_items);
        estimate.shots.push_back(shot);
    }
    std::sort(estimate.shots.begin(), estimate.shots.end(), [](const ShotResult &x, const ShotResult &y) {
        return x.m_hat != y.m_hat ? x.m_hat < y.m_hat : x.outcome < y.outcome;
    });
    const ShotResult &median = estimate.shots[(estimate.shots.size() - 1) / 2];
    estimate.m_hat = median.m_hat;
    estimate.theta_hat = median.theta;
    estimate.raw_outcome = median.outcome;
    estimate.delta = error_bound(params.precision_qubits, num_items, estimate.m_hat);
    return estimate;
}

CountEstimate quantum_count(const PriceScenario &scenario, const CountingParams &params) {
    params.validate();
    const RegisterLayout layout = negotiation_layout(scenario, RegisterOrder::kSellerHolds);
    const int total = layout.num_qubits() + params.precision_qubits;
    if (total > params.max_qubits) {
        throw ResourceError("counting needs " + std::to_string(total) + " qubits, capacity is " +
                            std::to_string(params.max_qubits));
    }
    auto grover = build_grover_iterate(make_negotiation_prep(scenario, layout), layout.work(),
                                       layout.segment(Register::kFlag).offset);
    StateVector prepared(layout.work().width);
    grover.prep().apply(prepared);
    return estimate_count(grover, prepared, scenario.num_products(), params);
}

}  // namespace q3pen
