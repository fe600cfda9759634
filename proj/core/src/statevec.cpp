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

#include "q3pen/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "q3pen/errors.hpp"

namespace q3pen {

namespace {

constexpr double kUnitaryTolerance = 1e-10;
constexpr double kInputTolerance = 1e-8;
constexpr double kEigenFloor = -1e-10;

void check_qubits(int target, const std::vector<Control> &controls) {
    if (target < 0) throw ArgumentError("gate target must be non-negative");
    for (std::size_t a = 0; a < controls.size(); ++a) {
        if (controls[a].qubit < 0) throw ArgumentError("gate control must be non-negative");
        if (controls[a].qubit == target) {
            throw ArgumentError("gate control overlaps target qubit " + std::to_string(target));
        }
        for (std::size_t b = a + 1; b < controls.size(); ++b) {
            if (controls[a].qubit == controls[b].qubit) {
                throw ArgumentError("duplicate control qubit " + std::to_string(controls[a].qubit));
            }
        }
    }
}

bool is_unitary(const Matrix2 &m) {
    // U^dagger U == I
    const Amplitude a = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
    const Amplitude b = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    const Amplitude d = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    return std::abs(a - 1.0) < kUnitaryTolerance && std::abs(b) < kUnitaryTolerance &&
           std::abs(d - 1.0) < kUnitaryTolerance;
}

/// Spreads the bits of `k` around zero bits inserted at `positions` (ascending).
inline std::uint64_t insert_zero_bits(std::uint64_t k, std::span<const int> positions) {
    for (int p : positions) {
        const std::uint64_t low = k & ((std::uint64_t{1} << p) - 1);
        k = ((k >> p) << (p + 1)) | low;
    }
    return k;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gate

Gate::Gate(GateKind kind, int target, double angle, const Matrix2 &matrix, std::vector<Control> controls)
    : kind_(kind), target_(target), angle_(angle), matrix_(matrix), controls_(std::move(controls)) {
    check_qubits(target_, controls_);
}

Gate Gate::Not(int target, std::vector<Control> controls) {
    return Gate(GateKind::kNot, target, 0.0, {0.0, 1.0, 1.0, 0.0}, std::move(controls));
}

Gate Gate::Hadamard(int target, std::vector<Control> controls) {
    const double s = std::numbers::sqrt2 / 2.0;
    return Gate(GateKind::kHadamard, target, 0.0, {s, s, s, -s}, std::move(controls));
}

Gate Gate::Phase(int target, double angle, std::vector<Control> controls) {
    return Gate(GateKind::kPhase, target, angle, {1.0, 0.0, 0.0, std::polar(1.0, angle)}, std::move(controls));
}

Gate Gate::Unitary(int target, const Matrix2 &matrix, std::vector<Control> controls) {
    if (!is_unitary(matrix)) throw ArgumentError("2x2 gate matrix is not unitary within 1e-10");
    return Gate(GateKind::kUnitary, target, 0.0, matrix, std::move(controls));
}

Matrix2 Gate::matrix() const { return matrix_; }

int Gate::max_qubit() const {
    int top = target_;
    for (const auto &c : controls_) top = std::max(top, c.qubit);
    return top;
}

Gate Gate::inverse() const {
    switch (kind_) {
        case GateKind::kNot:
        case GateKind::kHadamard:
            return *this;
        case GateKind::kPhase:
            return Phase(target_, -angle_, controls_);
        case GateKind::kUnitary:
            return Unitary(target_,
                           {std::conj(matrix_[0]), std::conj(matrix_[2]), std::conj(matrix_[1]),
                            std::conj(matrix_[3])},
                           controls_);
    }
    return *this;
}

Gate Gate::with_control(Control extra) const {
    auto controls = controls_;
    controls.push_back(extra);
    return Gate(kind_, target_, angle_, matrix_, std::move(controls));
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxSimulatorQubits) {
        throw ArgumentError("qubit count " + std::to_string(num_qubits) + " outside [0, " +
                            std::to_string(kMaxSimulatorQubits) + "]");
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::apply(const Gate &gate) {
    if (gate.max_qubit() >= num_qubits_) {
        throw ArgumentError("gate touches qubit " + std::to_string(gate.max_qubit()) + " of a " +
                            std::to_string(num_qubits_) + "-qubit state");
    }

    std::uint64_t on_mask = 0;
    std::vector<int> fixed;
    fixed.reserve(gate.controls().size() + 1);
    fixed.push_back(gate.target());
    for (const auto &c : gate.controls()) {
        fixed.push_back(c.qubit);
        if (c.polarity == ControlPolarity::kOne) on_mask |= std::uint64_t{1} << c.qubit;
    }
    std::sort(fixed.begin(), fixed.end());

    const std::uint64_t target_bit = std::uint64_t{1} << gate.target();
    const std::uint64_t pairs = std::uint64_t{1} << (num_qubits_ - static_cast<int>(fixed.size()));
    Amplitude *amp = amplitudes_.data();

    switch (gate.kind()) {
        case GateKind::kNot:
            for (std::uint64_t k = 0; k < pairs; ++k) {
                const std::uint64_t i0 = insert_zero_bits(k, fixed) | on_mask;
                std::swap(amp[i0], amp[i0 | target_bit]);
            }
            break;
        case GateKind::kPhase: {
            const Amplitude phase = std::polar(1.0, gate.angle());
            for (std::uint64_t k = 0; k < pairs; ++k) {
                const std::uint64_t i1 = insert_zero_bits(k, fixed) | on_mask | target_bit;
                amp[i1] *= phase;
            }
            break;
        }
        case GateKind::kHadamard:
        case GateKind::kUnitary: {
            const Matrix2 m = gate.matrix();
            for (std::uint64_t k = 0; k < pairs; ++k) {
                const std::uint64_t i0 = insert_zero_bits(k, fixed) | on_mask;
                const std::uint64_t i1 = i0 | target_bit;
                const Amplitude v0 = amp[i0];
                const Amplitude v1 = amp[i1];
                amp[i0] = m[0] * v0 + m[1] * v1;
                amp[i1] = m[2] * v0 + m[3] * v1;
            }
            break;
        }
    }
}

void StateVector::reflect(Segment segment, std::span<const Amplitude> axis) {
    if (segment.width <= 0 || segment.end() > num_qubits_) throw ArgumentError("reflection segment out of range");
    const std::size_t local = std::size_t{1} << segment.width;
    if (axis.size() != local) throw ArgumentError("reflection axis has wrong length");

    const std::uint64_t outer = std::uint64_t{1} << (num_qubits_ - segment.width);
    const std::uint64_t low_mask = (std::uint64_t{1} << segment.offset) - 1;
    for (std::uint64_t r = 0; r < outer; ++r) {
        const std::uint64_t base = ((r >> segment.offset) << segment.end()) | (r & low_mask);
        Amplitude overlap{0.0, 0.0};
        for (std::size_t j = 0; j < local; ++j) {
            overlap += std::conj(axis[j]) * amplitudes_[base | (j << segment.offset)];
        }
        if (overlap == Amplitude{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < local; ++j) {
            amplitudes_[base | (j << segment.offset)] -= 2.0 * axis[j] * overlap;
        }
    }
}

void StateVector::extend(int extra_qubits) {
    if (extra_qubits < 0) throw ArgumentError("cannot extend by a negative qubit count");
    if (num_qubits_ + extra_qubits > kMaxSimulatorQubits) {
        throw ResourceError("extending to " + std::to_string(num_qubits_ + extra_qubits) + " qubits exceeds " +
                            std::to_string(kMaxSimulatorQubits));
    }
    num_qubits_ += extra_qubits;
    amplitudes_.resize(std::size_t{1} << num_qubits_, Amplitude{0.0, 0.0});
}

std::vector<double> StateVector::marginal(Segment segment) const {
    if (segment.width <= 0) throw ArgumentError("empty measurement segment");
    if (segment.offset < 0 || segment.end() > num_qubits_) throw ArgumentError("segment outside the register");
    std::vector<double> probs(std::size_t{1} << segment.width, 0.0);
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        probs[segment.extract(k)] += std::norm(amplitudes_[k]);
    }
    return probs;
}

void StateVector::project(Segment segment, std::uint64_t value) {
    if (segment.width <= 0 || segment.offset < 0 || segment.end() > num_qubits_) {
        throw ArgumentError("segment outside the register");
    }
    double kept = 0.0;
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if (segment.extract(k) != value) {
            amplitudes_[k] = 0.0;
        } else {
            kept += std::norm(amplitudes_[k]);
        }
    }
    if (kept <= 0.0) throw ArgumentError("projection onto a zero-probability outcome");
    const double scale = 1.0 / std::sqrt(kept);
    for (auto &a : amplitudes_) a *= scale;
}

// ---------------------------------------------------------------------------
// Free functions

StateVector prepare_basis(int num_qubits, std::uint64_t basis_index) {
    StateVector state(num_qubits);
    if (basis_index >= state.dimension()) {
        throw ArgumentError("basis index " + std::to_string(basis_index) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
    }
    auto amps = state.mutable_amplitudes();
    amps[0] = 0.0;
    amps[basis_index] = 1.0;
    return state;
}

StateVector prepare_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
    if (num_qubits < 0 || num_qubits > kMaxSimulatorQubits) throw ArgumentError("qubit count out of range");
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw ArgumentError("expected " + std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
                            std::to_string(amplitudes.size()));
    }
    double sum = 0.0;
    for (const auto &a : amplitudes) sum += std::norm(a);
    if (sum == 0.0) throw ArgumentError("zero vector cannot be normalized");
    if (std::abs(sum - 1.0) > kInputTolerance) {
        throw ArgumentError("amplitudes have squared norm " + std::to_string(sum) + ", expected 1");
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (auto &a : amplitudes) a *= scale;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

MeasurementResult measure(const StateVector &state, Segment segment, std::mt19937_64 &rng) {
    const auto probs = state.marginal(segment);
    const std::uint64_t outcome = sample_index(probs, uniform01(rng));
    StateVector collapsed = state;
    collapsed.project(segment, outcome);
    return {outcome, std::move(collapsed)};
}

MeasurementResult measure(const StateVector &state, Segment segment, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    return measure(state, segment, rng);
}

Amplitude inner_product(const StateVector &lhs, const StateVector &rhs) {
    if (lhs.num_qubits() != rhs.num_qubits()) {
        throw ArgumentError("inner product of states with different qubit counts");
    }
    Amplitude sum{0.0, 0.0};
    const auto a = lhs.amplitudes();
    const auto b = rhs.amplitudes();
    for (std::size_t k = 0; k < a.size(); ++k) sum += std::conj(a[k]) * b[k];
    return sum;
}

DensityMatrix density_matrix(const StateVector &state) {
    const auto amps = state.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
    return psi * psi.adjoint();
}

double von_neumann_entropy(const DensityMatrix &rho) {
    if (rho.rows() == 0 || rho.rows() != rho.cols()) throw ArgumentError("density matrix must be square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kInputTolerance) {
        throw ArgumentError("density matrix is not Hermitian");
    }
    const Amplitude trace = rho.trace();
    if (std::abs(trace - 1.0) > kInputTolerance) throw ArgumentError("density matrix trace is not 1");

    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ArgumentError("eigendecomposition failed");
    double entropy = 0.0;
    for (double lambda : solver.eigenvalues()) {
        if (lambda < kEigenFloor) throw ArgumentError("density matrix is not positive semidefinite");
        if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
    }
    return std::max(entropy, 0.0);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master ^ (stream * 0x9E3779B97F4A7C15ULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t sample_index(std::span<const double> weights, double u) {
    if (weights.empty()) throw ArgumentError("cannot sample from an empty distribution");
    double total = 0.0;
    for (double w : weights) total += w;
    const double threshold = u * total;
    double acc = 0.0;
    std::uint64_t last_positive = 0;
    for (std::uint64_t k = 0; k < weights.size(); ++k) {
        if (weights[k] <= 0.0) continue;
        acc += weights[k];
        last_positive = k;
        if (threshold < acc) return k;
    }
    return last_positive;
}

}  // namespace q3pen
