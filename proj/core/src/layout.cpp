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

#include "q3pen/layout.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "q3pen/errors.hpp"

namespace q3pen {

std::string_view register_name(Register reg) {
    switch (reg) {
        case Register::kIndex:
            return "index";
        case Register::kPriceA:
            return "priceA";
        case Register::kPriceB:
            return "priceB";
        case Register::kFlag:
            return "flag";
        case Register::kAncilla:
            return "ancilla";
        case Register::kCounting:
            return "counting";
    }
    return "?";
}

int index_width(std::int64_t num_products) {
    if (num_products < 1) throw ArgumentError("product count must be at least 1");
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(num_products)));
}

int price_width(std::int64_t max_price) {
    if (max_price < 0) throw ArgumentError("prices must be non-negative");
    return std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(max_price))));
}

RegisterLayout &RegisterLayout::append(Register reg, int width) {
    if (has(reg)) throw ArgumentError("register " + std::string(register_name(reg)) + " already in layout");
    if (width < 0) throw ArgumentError("negative register width");
    if (reg == Register::kFlag && width != 1) throw ArgumentError("flag register must be exactly one qubit");
    segments_[slot(reg)] = Segment{num_qubits_, width};
    num_qubits_ += width;
    return *this;
}

Segment RegisterLayout::segment(Register reg) const {
    const auto &seg = segments_[slot(reg)];
    if (!seg) throw ArgumentError("layout has no " + std::string(register_name(reg)) + " register");
    return *seg;
}

Segment RegisterLayout::work() const {
    int top = 0;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (k == slot(Register::kCounting) || !segments_[k]) continue;
        top = std::max(top, segments_[k]->end());
    }
    if (has(Register::kCounting) && segment(Register::kCounting).offset < top) {
        throw ArgumentError("counting register must sit above the work registers");
    }
    return Segment{0, top};
}

}  // namespace q3pen
