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

#include "q3pen/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "q3pen/errors.hpp"

namespace q3pen {

PriceScenario::PriceScenario(std::vector<std::int64_t> buyer_prices, std::vector<std::int64_t> seller_prices,
                             std::int64_t threshold)
    : buyer_(std::move(buyer_prices)), seller_(std::move(seller_prices)), threshold_(threshold) {
    if (buyer_.empty()) throw ArgumentError("scenario needs at least one product");
    if (buyer_.size() != seller_.size()) {
        throw ArgumentError("buyer has " + std::to_string(buyer_.size()) + " prices but seller has " +
                            std::to_string(seller_.size()));
    }
    std::int64_t max_price = 0;
    for (auto p : buyer_) {
        if (p < 0) throw ArgumentError("negative buyer price");
        max_price = std::max(max_price, p);
    }
    for (auto p : seller_) {
        if (p < 0) throw ArgumentError("negative seller price");
        max_price = std::max(max_price, p);
    }
    if (threshold_ < 1 || threshold_ > num_products()) {
        throw ArgumentError("threshold epsilon must satisfy 1 <= epsilon <= N");
    }
    index_width_ = q3pen::index_width(num_products());
    price_width_ = q3pen::price_width(max_price);
}

std::int64_t PriceScenario::marked_count() const {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < buyer_.size(); ++i) count += classical_f(buyer_[i], seller_[i]);
    return count;
}

int classical_f(std::int64_t a, std::int64_t b) { return a >= b ? 1 : 0; }

// ---------------------------------------------------------------------------

void Circuit::add(Gate gate) {
    if (gate.max_qubit() >= layout_.num_qubits()) {
        throw ArgumentError("gate index " + std::to_string(gate.max_qubit()) + " outside a " +
                            std::to_string(layout_.num_qubits()) + "-qubit layout");
    }
    gates_.push_back(std::move(gate));
}

void Circuit::extend(const Circuit &other) {
    for (const auto &g : other.gates()) add(g);
}

Circuit Circuit::inverse() const {
    Circuit inv(layout_);
    inv.clean_ancilla_ = clean_ancilla_;
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(it->inverse());
    return inv;
}

void Circuit::apply(StateVector &state) const {
    if (state.num_qubits() < layout_.num_qubits()) {
        throw ArgumentError("state has fewer qubits than the circuit layout");
    }
    for (const auto &g : gates_) state.apply(g);
}

// ---------------------------------------------------------------------------

namespace {

/// Controls selecting the index register value `value` (mixed polarity).
std::vector<Control> index_pattern(Segment index, std::uint64_t value) {
    std::vector<Control> controls;
    controls.reserve(static_cast<std::size_t>(index.width));
    for (int j = 0; j < index.width; ++j) {
        const bool bit = (value >> j) & 1U;
        controls.push_back(bit ? on_one(index.qubit(j)) : on_zero(index.qubit(j)));
    }
    return controls;
}

}  // namespace

Circuit build_price_oracle(std::span<const std::int64_t> prices, const RegisterLayout &layout, Register target) {
    const Segment index = layout.segment(Register::kIndex);
    const Segment dest = layout.segment(target);
    if (prices.empty()) throw ArgumentError("oracle needs at least one price");
    if (prices.size() >= (std::size_t{1} << index.width)) {
        throw ArgumentError("index register too narrow for " + std::to_string(prices.size()) + " products");
    }

    Circuit circuit(layout);
    for (std::size_t k = 0; k < prices.size(); ++k) {
        const std::int64_t price = prices[k];
        if (price < 0 || (dest.width < 63 && price >= (std::int64_t{1} << dest.width))) {
            throw ArgumentError("price " + std::to_string(price) + " does not fit in " + std::to_string(dest.width) +
                                " qubits");
        }
        const auto controls = index_pattern(index, k + 1);  // products are numbered from 1
        for (int j = 0; j < dest.width; ++j) {
            if ((price >> j) & 1) circuit.add(Gate::Not(dest.qubit(j), controls));
        }
    }
    return circuit;
}

int comparator_ancilla_width(int price_bits) { return price_bits; }

Circuit build_comparator(int price_bits, const RegisterLayout &layout) {
    if (price_bits < 1) throw ArgumentError("comparator needs at least one price bit");
    const Segment a = layout.segment(Register::kPriceA);
    const Segment b = layout.segment(Register::kPriceB);
    const int flag = layout.segment(Register::kFlag).offset;
    if (a.width != price_bits || b.width != price_bits) {
        throw ArgumentError("price registers must be " + std::to_string(price_bits) + " qubits wide");
    }
    if (!layout.has(Register::kAncilla) ||
        layout.segment(Register::kAncilla).width < comparator_ancilla_width(price_bits)) {
        throw ArgumentError("comparator needs " + std::to_string(comparator_ancilla_width(price_bits)) +
                            " ancilla qubits");
    }
    const Segment anc = layout.segment(Register::kAncilla);

    // Per-bit one-qubit comparison: anc_j = [a_j < b_j], then b_j := a_j XOR b_j.
    Circuit compute(layout);
    for (int j = 0; j < price_bits; ++j) {
        compute.add(Gate::Not(anc.qubit(j), {on_zero(a.qubit(j)), on_one(b.qubit(j))}));
    }
    for (int j = 0; j < price_bits; ++j) compute.add(Gate::Not(b.qubit(j), {on_one(a.qubit(j))}));

    Circuit circuit(layout);
    circuit.extend(compute);
    // Cascade from the most significant bit: the terms are mutually exclusive, so XOR acts as OR.
    for (int j = price_bits - 1; j >= 0; --j) {
        std::vector<Control> controls{on_one(anc.qubit(j))};
        for (int k = j + 1; k < price_bits; ++k) controls.push_back(on_zero(b.qubit(k)));
        circuit.add(Gate::Not(flag, std::move(controls)));
    }
    circuit.add(Gate::Not(flag));
    circuit.extend(compute.inverse());
    circuit.declare_clean_ancilla(anc);
    return circuit;
}

Circuit build_flag_oracle(const RegisterLayout &layout) {
    return build_comparator(layout.segment(Register::kPriceA).width, layout);
}

RegisterLayout negotiation_layout(const PriceScenario &scenario, RegisterOrder order, int counting_width) {
    const int d = scenario.price_width();
    RegisterLayout layout;
    layout.append(Register::kIndex, scenario.index_width());
    if (order == RegisterOrder::kSellerHolds) {
        layout.append(Register::kPriceA, d).append(Register::kPriceB, d);
    } else {
        layout.append(Register::kPriceB, d).append(Register::kPriceA, d);
    }
    layout.append(Register::kFlag, 1).append(Register::kAncilla, comparator_ancilla_width(d));
    if (counting_width > 0) layout.append(Register::kCounting, counting_width);
    return layout;
}

std::vector<Amplitude> uniform_index_amplitudes(std::int64_t num_products, int index_bits) {
    if (num_products < 1 || index_bits < 1 || num_products >= (std::int64_t{1} << index_bits)) {
        throw ArgumentError("index register cannot hold products 1..N");
    }
    std::vector<Amplitude> amps(std::size_t{1} << index_bits, Amplitude{0.0, 0.0});
    const double value = 1.0 / std::sqrt(static_cast<double>(num_products));
    for (std::int64_t i = 1; i <= num_products; ++i) amps[static_cast<std::size_t>(i)] = value;
    return amps;
}

StateVector simulate_comparison_state(const PriceScenario &scenario, const RegisterLayout &layout) {
    const Segment index = layout.segment(Register::kIndex);
    const auto local = uniform_index_amplitudes(scenario.num_products(), index.width);
    std::vector<Amplitude> amps(std::size_t{1} << layout.num_qubits(), Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < local.size(); ++i) amps[index.deposit(i)] = local[i];
    StateVector state = prepare_amplitudes(layout.num_qubits(), std::move(amps));

    build_price_oracle(scenario.buyer_prices(), layout, Register::kPriceA).apply(state);
    build_price_oracle(scenario.seller_prices(), layout, Register::kPriceB).apply(state);
    build_flag_oracle(layout).apply(state);
    return state;
}

}  // namespace q3pen
