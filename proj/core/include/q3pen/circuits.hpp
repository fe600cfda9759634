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
 * Unitaries of the negotiation: price-loading oracles, the comparator that
 * writes [a >= b] into a flag qubit, and the helpers that assemble the
 * comparison state |i>|a_i>|b_i>|f(a_i, b_i)>.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "q3pen/layout.hpp"
#include "q3pen/statevec.hpp"

namespace q3pen {

/// Buyer and seller price vectors plus the trade threshold.
class PriceScenario {
   public:
    /// Validates |A| = |B| >= 1, non-negative prices and 1 <= epsilon <= N.
    PriceScenario(std::vector<std::int64_t> buyer_prices, std::vector<std::int64_t> seller_prices,
                  std::int64_t threshold);

    std::int64_t num_products() const { return static_cast<std::int64_t>(buyer_.size()); }
    std::span<const std::int64_t> buyer_prices() const { return buyer_; }
    std::span<const std::int64_t> seller_prices() const { return seller_; }
    std::int64_t threshold() const { return threshold_; }

    int index_width() const { return index_width_; }
    int price_width() const { return price_width_; }

    /// Number of products with buyer price >= seller price, counted classically.
    std::int64_t marked_count() const;

   private:
    std::vector<std::int64_t> buyer_;
    std::vector<std::int64_t> seller_;
    std::int64_t threshold_;
    int index_width_;
    int price_width_;
};

/// f(a, b) = 1 iff a >= b.
int classical_f(std::int64_t a, std::int64_t b);

/// Ordered gate list bound to a layout. Immutable once built by the factories below.
class Circuit {
   public:
    explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

    const RegisterLayout &layout() const { return layout_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Ancilla segment this circuit promises to return to |0...0>.
    const std::optional<Segment> &clean_ancilla() const { return clean_ancilla_; }

    void add(Gate gate);
    void extend(const Circuit &other);
    void declare_clean_ancilla(Segment segment) { clean_ancilla_ = segment; }

    Circuit inverse() const;
    void apply(StateVector &state) const;

   private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
    std::optional<Segment> clean_ancilla_;
};

/**
 * |i>|t> -> |i>|t XOR price_i> for i in 1..N; every other index value is left
 * untouched. One mixed-polarity multi-controlled NOT per set price bit.
 */
Circuit build_price_oracle(std::span<const std::int64_t> prices, const RegisterLayout &layout, Register target);

/// Ancilla qubits build_comparator needs for d-bit prices.
int comparator_ancilla_width(int price_bits);

/**
 * |a>|b>|f>|0> -> |a>|b>|f XOR [a >= b]>|0>, with a in kPriceA and b in kPriceB.
 *
 * Each bit's "a_j < b_j" lands in its own ancilla through a mixed-polarity
 * Toffoli; the seller register is then XORed with the buyer register so it
 * holds the per-bit difference pattern. Scanning from the most significant
 * bit, the flag picks up a_j < b_j only when every higher difference bit is
 * zero (control-on-zero gating), so only the first differing bit decides.
 * The flag is finally inverted to turn [a < b] into [a >= b] and the
 * difference and ancilla qubits are uncomputed.
 */
Circuit build_comparator(int price_bits, const RegisterLayout &layout);

/// The comparator applied across the whole superposition (the flag oracle).
Circuit build_flag_oracle(const RegisterLayout &layout);

enum class RegisterOrder {
    kSellerHolds,  // index | priceA | priceB | flag | ancilla: the state that started with the buyer
    kBuyerHolds,   // index | priceB | priceA | flag | ancilla: the state that started with the seller
};

/// Work-register layout for one party's copy of the comparison state, plus an optional counting register.
RegisterLayout negotiation_layout(const PriceScenario &scenario, RegisterOrder order, int counting_width = 0);

/// Amplitudes 1/sqrt(N) on index values 1..N of an n-qubit register.
std::vector<Amplitude> uniform_index_amplitudes(std::int64_t num_products, int index_bits);

/// Runs oracle loads and the flag oracle from |0...0>, yielding (1/sqrt N) sum_i |i>|a_i>|b_i>|f_i>.
StateVector simulate_comparison_state(const PriceScenario &scenario, const RegisterLayout &layout);

}  // namespace q3pen
