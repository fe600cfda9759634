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
 * Dense state-vector simulator.
 *
 * Qubit 0 is the least-significant bit of the basis index everywhere in this
 * library: basis state |k> has qubit j set iff bit j of k is set.
 */

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace q3pen {

using Amplitude = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

/// Largest register a StateVector will allocate.
inline constexpr int kMaxSimulatorQubits = 28;

enum class ControlPolarity { kOne, kZero };

struct Control {
    int qubit = 0;
    ControlPolarity polarity = ControlPolarity::kOne;
};

inline Control on_one(int qubit) { return {qubit, ControlPolarity::kOne}; }
inline Control on_zero(int qubit) { return {qubit, ControlPolarity::kZero}; }

enum class GateKind { kNot, kHadamard, kPhase, kUnitary };

/**
 * A single-target gate with any number of mixed-polarity controls.
 *
 * kPhase is diag(1, e^{i angle}). Construction validates that the target and
 * controls are distinct and non-negative and that kUnitary matrices are
 * unitary within 1e-10.
 */
class Gate {
   public:
    static Gate Not(int target, std::vector<Control> controls = {});
    static Gate Hadamard(int target, std::vector<Control> controls = {});
    static Gate Phase(int target, double angle, std::vector<Control> controls = {});
    static Gate Unitary(int target, const Matrix2 &matrix, std::vector<Control> controls = {});

    GateKind kind() const { return kind_; }
    int target() const { return target_; }
    double angle() const { return angle_; }
    const std::vector<Control> &controls() const { return controls_; }
    Matrix2 matrix() const;

    /// Largest qubit index touched by this gate.
    int max_qubit() const;

    Gate inverse() const;
    Gate with_control(Control extra) const;

   private:
    Gate(GateKind kind, int target, double angle, const Matrix2 &matrix, std::vector<Control> controls);

    GateKind kind_;
    int target_;
    double angle_;
    Matrix2 matrix_;
    std::vector<Control> controls_;
};

/// Contiguous run of qubits [offset, offset + width).
struct Segment {
    int offset = 0;
    int width = 0;

    int qubit(int j) const { return offset + j; }
    int end() const { return offset + width; }
    std::uint64_t mask() const { return ((std::uint64_t{1} << width) - 1) << offset; }
    std::uint64_t extract(std::uint64_t basis) const { return (basis >> offset) & ((std::uint64_t{1} << width) - 1); }
    std::uint64_t deposit(std::uint64_t value) const { return value << offset; }
    bool overlaps(const Segment &other) const {
        return width > 0 && other.width > 0 && offset < other.end() && other.offset < end();
    }
    bool operator==(const Segment &) const = default;
};

class StateVector {
   public:
    /// |0...0> on num_qubits qubits.
    explicit StateVector(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }
    Amplitude amplitude(std::uint64_t basis) const { return amplitudes_.at(basis); }
    double probability(std::uint64_t basis) const { return std::norm(amplitudes_.at(basis)); }
    double norm() const;

    void apply(const Gate &gate);

    /**
     * Householder reflection I - 2|w><w| on the qubits of `segment`, acting
     * independently on every assignment of the remaining qubits. `axis` must
     * hold 2^width entries with unit norm.
     */
    void reflect(Segment segment, std::span<const Amplitude> axis);

    /// Tensor |0>^extra onto the high end of the register.
    void extend(int extra_qubits);

    /// Marginal distribution of the value held by `segment`.
    std::vector<double> marginal(Segment segment) const;

    /// Zero every amplitude whose segment value differs from `value`, then renormalize.
    void project(Segment segment, std::uint64_t value);

   private:
    friend StateVector prepare_amplitudes(int, std::vector<Amplitude>);
    StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

StateVector prepare_basis(int num_qubits, std::uint64_t basis_index);

/// Injects the given amplitudes, renormalizing. Input norm must be 1 within 1e-8.
StateVector prepare_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

StateVector apply_gate(StateVector state, const Gate &gate);

struct MeasurementResult {
    std::uint64_t outcome = 0;
    StateVector collapsed;
};

MeasurementResult measure(const StateVector &state, Segment segment, std::uint64_t rng_seed);
MeasurementResult measure(const StateVector &state, Segment segment, std::mt19937_64 &rng);

/// <lhs|rhs>
Amplitude inner_product(const StateVector &lhs, const StateVector &rhs);

using DensityMatrix = Eigen::MatrixXcd;

DensityMatrix density_matrix(const StateVector &state);

/// S(rho) in bits, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix &rho);

// Seeded sampling helpers shared by every stochastic component.

/// Stream-splitting for child seeds (splitmix64 finalizer over master ^ stream).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// 53-bit uniform double in [0, 1); identical across standard libraries.
double uniform01(std::mt19937_64 &rng);

/// Inverse-CDF draw from an unnormalized discrete distribution.
std::uint64_t sample_index(std::span<const double> weights, double u);

}  // namespace q3pen
