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
 * Closed-form and simulated figures behind the privacy and efficiency claims:
 * the Holevo quantity of the price-carrying ensemble, communication-cost
 * tables against the classical C05/A07 protocols, and the cheat-detection curve.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "q3pen/circuits.hpp"
#include "q3pen/statevec.hpp"

namespace q3pen {

/// Density matrices are only built up to this many qubits (1024 x 1024).
inline constexpr int kMaxDensityQubits = 10;

/// Ensemble {P_i, |psi_i><psi_i|} of pure states.
struct EnsembleSpec {
    std::vector<double> probabilities;
    std::vector<StateVector> states;
};

/// {1/N, |i>|price_i>} for i = 1..N, loaded through the price oracle.
EnsembleSpec price_ensemble(std::span<const std::int64_t> prices, int index_bits, int price_bits);

struct HolevoQuantity {
    double mixture_entropy = 0.0;    // S(sum_i P_i rho_i)
    double mean_member_entropy = 0.0;  // sum_i P_i S(rho_i)
    double bound = 0.0;              // their difference
};

HolevoQuantity holevo_quantity(const EnsembleSpec &ensemble);

/// Accessible-information bound on the buyer's state |phi'_A>; log2 N for orthogonal members.
double holevo_bound(const PriceScenario &scenario);

enum class CostProtocol { kQ3pen, kC05, kA07 };

/// Exchanged qubits + cbits (Q3PEN) or cbits (C05, A07) for N products with d-bit prices.
std::int64_t communication_cost(CostProtocol protocol, std::int64_t num_products, int price_bits);

struct CostRow {
    std::int64_t num_products = 0;
    std::int64_t q3pen = 0;
    std::int64_t c05 = 0;
    std::int64_t a07 = 0;
    std::int64_t q3pen_qubits = 0;
    std::int64_t q3pen_cbits = 0;
};

std::vector<CostRow> cost_table(std::int64_t n_min, std::int64_t n_max, int price_bits);

/// Smallest N in [1, n_max] from which q3pen < c05 < a07 holds for every row up to n_max.
std::optional<std::int64_t> cost_crossover(int price_bits, std::int64_t n_max);

/// "N,q3pen,c05,a07" (plus q3pen_qubits,q3pen_cbits when split).
std::string cost_table_csv(const std::vector<CostRow> &rows, bool split_units = false);

struct DetectionRow {
    int message_bits = 0;
    double committed_bits = 0.0;  // m = c n
    double probability = 0.0;
};

std::vector<DetectionRow> detection_curve(double expansion, int n_min, int n_max);

/// "n,m,p_detect", probabilities with six fractional digits.
std::string detection_curve_csv(const std::vector<DetectionRow> &rows);

}  // namespace q3pen
