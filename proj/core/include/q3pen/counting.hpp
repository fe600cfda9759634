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
 * Quantum counting: phase estimation on the Grover iterate
 * Q = A S_0 A^-1 S_f built from a state-preparation operator A and a flag qubit.
 *
 * Phase convention. With A|0> = sin(th)|marked> + cos(th)|unmarked> and
 * sin^2(th) = M/N, Q = -G where G is the textbook Grover rotation by 2 th,
 * so the eigenphases of Q are pi +/- 2 th. A phase-register outcome w maps to
 *
 *     theta_hat = | 2 pi w / 2^t - pi |          in [0, pi]   (the rotation 2 th)
 *     m_hat     = round(N sin^2(theta_hat / 2)) = round(N cos^2(pi w / 2^t))
 *
 * which is symmetric under w -> 2^t - w. The unit tests pin this convention
 * against brute-force counts.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "q3pen/circuits.hpp"
#include "q3pen/statevec.hpp"

namespace q3pen {

struct CountingParams {
    int precision_qubits = 6;
    int shots = 11;
    std::uint64_t seed = 42;
    int max_qubits = 20;

    void validate() const;
};

struct ShotResult {
    std::uint64_t outcome = 0;
    double theta = 0.0;
    std::int64_t m_hat = 0;
};

struct CountEstimate {
    std::int64_t m_hat = 0;
    double theta_hat = 0.0;
    double delta = 0.0;
    std::uint64_t raw_outcome = 0;
    std::vector<ShotResult> shots;  // sorted by (m_hat, outcome)
};

/// A unitary A given as a forward/inverse pair of in-place actions on a state.
class StatePrep {
   public:
    using Action = std::function<void(StateVector &)>;

    StatePrep(int num_qubits, Action forward, Action inverse);

    int num_qubits() const { return num_qubits_; }
    bool has_inverse() const { return static_cast<bool>(inverse_); }
    void apply(StateVector &state) const { forward_(state); }
    void apply_inverse(StateVector &state) const;

   private:
    int num_qubits_;
    Action forward_;
    Action inverse_;
};

/**
 * A for the negotiation: a Householder reflection swapping |0> with the
 * uniform superposition over indices 1..N on the index register, followed by
 * both price oracles and the flag oracle.
 */
StatePrep make_negotiation_prep(const PriceScenario &scenario, const RegisterLayout &layout);

/// Same operator assembled from the two parties' oracles treated as black boxes.
StatePrep make_negotiation_prep(std::int64_t num_products, const RegisterLayout &layout, const Circuit &buyer_oracle,
                                const Circuit &seller_oracle);

class GroverIterate {
   public:
    const StatePrep &prep() const { return prep_; }
    Segment work() const { return work_; }
    int flag_qubit() const { return flag_; }

    /// One application of Q; with `control`, only S_f and S_0 carry the control.
    void apply(StateVector &state, std::optional<int> control = std::nullopt) const;

   private:
    friend GroverIterate build_grover_iterate(StatePrep prep, Segment work, int flag_qubit);
    GroverIterate(StatePrep prep, Segment work, int flag) : prep_(std::move(prep)), work_(work), flag_(flag) {}

    StatePrep prep_;
    Segment work_;
    int flag_;
};

/// Throws ConstructionError when A has no inverse or A^-1 A |0> != |0>.
GroverIterate build_grover_iterate(StatePrep prep, Segment work, int flag_qubit);

/// Gates of the quantum Fourier transform |x> -> 2^{-w/2} sum_k e^{2 pi i x k / 2^w} |k> on `segment`.
std::vector<Gate> qft_gates(Segment segment);
std::vector<Gate> inverse_qft_gates(Segment segment);

/**
 * Distribution of the t-qubit phase register after phase estimation of Q on
 * `prepared` (a state on Q's work qubits). The controlled powers are formed by
 * applying Q to the work register and placing Q^c|psi> in counting slot c.
 */
std::vector<double> phase_estimation_distribution(const GroverIterate &grover, const StateVector &prepared,
                                                  int precision_qubits);

/// Same distribution, simulated gate by gate with controlled-Q^{2^j} on the full register.
std::vector<double> phase_estimation_circuit_distribution(const GroverIterate &grover, const StateVector &prepared,
                                                          int precision_qubits);

double outcome_to_theta(std::uint64_t outcome, int precision_qubits);
std::int64_t outcome_to_count(std::uint64_t outcome, int precision_qubits, std::int64_t num_items);

/**
 * |M - m_hat| <= 2 pi sqrt(m_hat N) / 2^t + pi^2 N / 2^{2t}, the counting
 * error bound with m_hat standing in for the unknown M.
 */
double error_bound(int precision_qubits, std::int64_t num_items, std::int64_t m_hat);

/// Phase estimation once, then `shots` seeded draws; the median draw is the estimate.
CountEstimate estimate_count(const GroverIterate &grover, const StateVector &prepared, std::int64_t num_items,
                             const CountingParams &params);

CountEstimate quantum_count(const PriceScenario &scenario, const CountingParams &params);

}  // namespace q3pen
