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

#include "q3pen/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "q3pen/commitment.hpp"
#include "q3pen/errors.hpp"

namespace q3pen {

EnsembleSpec price_ensemble(std::span<const std::int64_t> prices, int index_bits, int price_bits) {
    if (index_bits + price_bits > kMaxDensityQubits) {
        throw ResourceError("ensemble needs " + std::to_string(index_bits + price_bits) +
                            " qubits; density matrices are capped at " + std::to_string(kMaxDensityQubits));
    }
    RegisterLayout layout;
    layout.append(Register::kIndex, index_bits).append(Register::kPriceA, price_bits);
    const Circuit oracle = build_price_oracle(prices, layout, Register::kPriceA);

    EnsembleSpec ensemble;
    const double p = 1.0 / static_cast<double>(prices.size());
    for (std::size_t i = 1; i <= prices.size(); ++i) {
        StateVector member = prepare_basis(layout.num_qubits(), i);
        oracle.apply(member);
        ensemble.probabilities.push_back(p);
        ensemble.states.push_back(std::move(member));
    }
    return ensemble;
}

HolevoQuantity holevo_quantity(const EnsembleSpec &ensemble) {
    if (ensemble.states.empty() || ensemble.states.size() != ensemble.probabilities.size()) {
        throw ArgumentError("ensemble needs one probability per member");
    }
    const int q = ensemble.states.front().num_qubits();
    if (q > kMaxDensityQubits) throw ResourceError("ensemble too large for density-matrix analysis");

    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << q);
    DensityMatrix mixture = DensityMatrix::Zero(dim, dim);
    HolevoQuantity h;
    double total = 0.0;
    for (std::size_t k = 0; k < ensemble.states.size(); ++k) {
        const auto &state = ensemble.states[k];
        if (state.num_qubits() != q) throw ArgumentError("ensemble members differ in qubit count");
        const double p = ensemble.probabilities[k];
        if (p < 0.0) throw ArgumentError("negative ensemble probability");
        const DensityMatrix member = density_matrix(state);
        mixture += p * member;
        h.mean_member_entropy += p * von_neumann_entropy(member);
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-8) throw ArgumentError("ensemble probabilities do not sum to 1");
    h.mixture_entropy = von_neumann_entropy(mixture);
    h.bound = h.mixture_entropy - h.mean_member_entropy;
    return h;
}

double holevo_bound(const PriceScenario &scenario) {
    return holevo_quantity(price_ensemble(scenario.buyer_prices(), scenario.index_width(), scenario.price_width()))
        .bound;
}

// ---------------------------------------------------------------------------

std::int64_t communication_cost(CostProtocol protocol, std::int64_t num_products, int price_bits) {
    if (num_products < 1) throw ArgumentError("N must be at least 1");
    if (price_bits < 1) throw ArgumentError("d must be at least 1");
    switch (protocol) {
        case CostProtocol::kQ3pen:
            return 4 * index_width(num_products) + 2 * price_bits;
        case CostProtocol::kC05:
            return 2 * num_products * price_bits;
        case CostProtocol::kA07:
            return 4 * num_products * price_bits;
    }
    return 0;
}

std::vector<CostRow> cost_table(std::int64_t n_min, std::int64_t n_max, int price_bits) {
    if (price_bits < 1) throw ArgumentError("d must be at least 1");
    if (n_min < 1 || n_max < n_min) throw ArgumentError("N range must satisfy 1 <= min <= max");
    std::vector<CostRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        CostRow row;
        row.num_products = n;
        row.q3pen = communication_cost(CostProtocol::kQ3pen, n, price_bits);
        row.c05 = communication_cost(CostProtocol::kC05, n, price_bits);
        row.a07 = communication_cost(CostProtocol::kA07, n, price_bits);
        row.q3pen_qubits = 2 * (index_width(n) + price_bits);
        row.q3pen_cbits = 2 * index_width(n);
        rows.push_back(row);
    }
    return rows;
}

std::optional<std::int64_t> cost_crossover(int price_bits, std::int64_t n_max) {
    const auto rows = cost_table(1, n_max, price_bits);
    std::optional<std::int64_t> start;
    for (const auto &row : rows) {
        if (row.q3pen < row.c05 && row.c05 < row.a07) {
            if (!start) start = row.num_products;
        } else {
            start.reset();
        }
    }
    return start;
}

std::string cost_table_csv(const std::vector<CostRow> &rows, bool split_units) {
    std::ostringstream out;
    out << "N,q3pen,c05,a07";
    if (split_units) out << ",q3pen_qubits,q3pen_cbits";
    out << '\n';
    for (const auto &r : rows) {
        out << r.num_products << ',' << r.q3pen << ',' << r.c05 << ',' << r.a07;
        if (split_units) out << ',' << r.q3pen_qubits << ',' << r.q3pen_cbits;
        out << '\n';
    }
    return out.str();
}

std::vector<DetectionRow> detection_curve(double expansion, int n_min, int n_max) {
    if (!(expansion > 1.0)) throw ArgumentError("expansion c must exceed 1");
    if (n_min < 1 || n_max < n_min) throw ArgumentError("n range must satisfy 1 <= min <= max");
    std::vector<DetectionRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const double m = expansion * n;
        rows.push_back({n, m, cheat_detection_probability(n, m)});
    }
    return rows;
}

std::string detection_curve_csv(const std::vector<DetectionRow> &rows) {
    std::string out = "n,m,p_detect\n";
    char buf[96];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.10g,%.6f\n", r.message_bits, r.committed_bits, r.probability);
        out += buf;
    }
    return out;
}

}  // namespace q3pen
