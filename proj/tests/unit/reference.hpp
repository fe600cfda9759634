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

// Reference implementations used as oracles by the unit tests. They share no
// code with the library kernels.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "q3pen/statevec.hpp"

namespace q3pen::testing {

inline bool controls_hold(const Gate &g, std::uint64_t basis) {
    for (const auto &c : g.controls()) {
        const bool bit = (basis >> c.qubit) & 1U;
        if (bit != (c.polarity == ControlPolarity::kOne)) return false;
    }
    return true;
}

/// Dense 2^q x 2^q matrix of a controlled single-qubit gate, built entry by entry.
inline Eigen::MatrixXcd dense_gate(const Gate &g, int q) {
    const std::uint64_t dim = std::uint64_t{1} << q;
    const Matrix2 u = g.matrix();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        if (!controls_hold(g, col)) {
            m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
            continue;
        }
        const int in_bit = static_cast<int>((col >> g.target()) & 1U);
        for (int out_bit = 0; out_bit < 2; ++out_bit) {
            const std::uint64_t row = (col & ~(std::uint64_t{1} << g.target())) |
                                      (static_cast<std::uint64_t>(out_bit) << g.target());
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = u[static_cast<std::size_t>(out_bit * 2 + in_bit)];
        }
    }
    return m;
}

inline Eigen::VectorXcd to_eigen(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitude(i);
    return v;
}

inline StateVector random_state(int q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<Amplitude> amps(std::size_t{1} << q);
    double sum = 0.0;
    for (auto &a : amps) {
        a = {normal(rng), normal(rng)};
        sum += std::norm(a);
    }
    for (auto &a : amps) a /= std::sqrt(sum);
    return prepare_amplitudes(q, std::move(amps));
}

inline double max_deviation(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
    return worst;
}

inline int popcount64(std::uint64_t x) {
    int c = 0;
    for (; x != 0; x &= x - 1) ++c;
    return c;
}

}  // namespace q3pen::testing
