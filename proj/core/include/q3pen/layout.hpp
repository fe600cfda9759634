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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "q3pen/statevec.hpp"

namespace q3pen {

/// Roles a qubit segment can play in the negotiation circuits.
enum class Register { kIndex, kPriceA, kPriceB, kFlag, kAncilla, kCounting };

std::string_view register_name(Register reg);

/// ceil(log2(N + 1)): qubits needed to hold product indices 0..N.
int index_width(std::int64_t num_products);

/// ceil(log2(max_price + 1)), floored at one qubit.
int price_width(std::int64_t max_price);

/**
 * Named, disjoint qubit segments laid out from qubit 0 upward in the order
 * they are appended. The order is a free choice: the buyer holds
 * index|priceB|priceA while the seller holds index|priceA|priceB.
 */
class RegisterLayout {
   public:
    RegisterLayout &append(Register reg, int width);

    bool has(Register reg) const { return segments_[slot(reg)].has_value(); }
    Segment segment(Register reg) const;
    int num_qubits() const { return num_qubits_; }

    /// Segment covering everything except the counting register.
    Segment work() const;

   private:
    static std::size_t slot(Register reg) { return static_cast<std::size_t>(reg); }

    std::array<std::optional<Segment>, 6> segments_{};
    int num_qubits_ = 0;
};

}  // namespace q3pen
