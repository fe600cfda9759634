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
 * Quantum bit-string commitment with code-based fingerprints.
 *
 * A message x of n bits is encoded by a binary linear code E into m = ceil(c n)
 * bits and committed as the fingerprint
 *
 *     |tau_x> = m^{-1/2} sum_{j < m} (-1)^{E(x)_j} |j>
 *
 * on ceil(log2 m) qubits. Basis states j >= m (present when m is not a power of
 * two) carry amplitude zero, so <tau_x|tau_y> = 1 - 2 dist(E(x), E(y)) / m
 * exactly. Verification is the projective measurement {|tau><tau|, I - |tau><tau|}.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "q3pen/statevec.hpp"

namespace q3pen {

struct BitString {
    std::uint64_t bits = 0;  // bit k is character k from the right
    int length = 0;

    static BitString from_value(std::uint64_t value, int length);
    std::string to_string() const;  // most significant bit first
    bool operator==(const BitString &) const = default;
};

int hamming_distance(std::span<const std::uint8_t> lhs, std::span<const std::uint8_t> rhs);

/**
 * Generator-matrix binary code. Column j of the generator is a mask over the
 * message bits; codeword bit j is the parity of (x & column_j).
 */
class LinearCode {
   public:
    /// Largest message length whose codebook is enumerated exhaustively.
    static constexpr int kMaxMessageBits = 20;

    /**
     * Seeded random generator, redrawn until every nonzero codeword weight w
     * satisfies ceil(r m) <= w < m with r = min_relative_distance. Draws that
     * also keep w <= m - ceil(r m) are preferred; when none turns up in the
     * first 2000 draws, the candidate with the largest relative_distance() wins.
     */
    static LinearCode random(int message_bits, double expansion, std::uint64_t seed,
                             double min_relative_distance = 0.25);

    /// Deterministic code: the message itself, then parities x_k ^ x_{k+1 mod n} cycled to fill m bits.
    static LinearCode parity_repetition(int message_bits, double expansion);

    int message_bits() const { return message_bits_; }
    int codeword_bits() const { return static_cast<int>(columns_.size()); }
    double expansion() const { return expansion_; }
    const std::vector<std::uint64_t> &generator_columns() const { return columns_; }

    std::vector<std::uint8_t> encode(const BitString &message) const;

    int min_weight() const { return min_weight_; }
    int max_weight() const { return max_weight_; }
    int min_distance() const { return min_weight_; }

    /**
     * delta_code = min(w_min, m - w_max) / m: every pair of distinct codewords
     * differs in at least delta_code m and at most (1 - delta_code) m positions,
     * so |<tau_x|tau_y>| <= 1 - 2 delta_code.
     */
    double relative_distance() const;

   private:
    LinearCode(int message_bits, double expansion, std::vector<std::uint64_t> columns);

    int message_bits_;
    double expansion_;
    std::vector<std::uint64_t> columns_;
    int min_weight_ = 0;
    int max_weight_ = 0;
};

/// m = ceil(c n); requires c > 1 and 1 <= n <= LinearCode::kMaxMessageBits.
int codeword_length(int message_bits, double expansion);

int fingerprint_qubits(int codeword_bits);

StateVector fingerprint_state(const LinearCode &code, const BitString &message);

/// |<tau_x|tau_y>|^2, the probability that a fingerprint of x passes a check for y.
double acceptance_probability(const LinearCode &code, const BitString &committed, const BitString &unveiled);

enum class CommitPhase { kCommitted, kUnveiled, kAccepted, kRejected };

std::string_view commit_phase_name(CommitPhase phase);

class CommitmentRecord {
   public:
    const StateVector &fingerprint() const { return fingerprint_; }
    int committed_length() const { return committed_length_; }
    const LinearCode &code() const { return code_; }
    CommitPhase phase() const { return phase_; }
    const std::optional<BitString> &unveiled() const { return unveiled_; }
    /// Probability the last verification had of accepting; set once verified.
    std::optional<double> accept_probability() const { return accept_probability_; }

   private:
    friend CommitmentRecord commit(const BitString &, const LinearCode &);
    friend void unveil(CommitmentRecord &, const BitString &);
    friend bool verify(CommitmentRecord &, std::mt19937_64 &);

    CommitmentRecord(StateVector fingerprint, int length, LinearCode code)
        : fingerprint_(std::move(fingerprint)), committed_length_(length), code_(std::move(code)) {}

    StateVector fingerprint_;
    int committed_length_;
    LinearCode code_;
    CommitPhase phase_ = CommitPhase::kCommitted;
    std::optional<BitString> unveiled_;
    std::optional<double> accept_probability_;
};

CommitmentRecord commit(const BitString &message, const LinearCode &code);

/// committed -> unveiled. A second unveil throws StateError.
void unveil(CommitmentRecord &record, const BitString &claimed);

/// unveiled -> accepted/rejected by sampling the projective measurement; collapses the fingerprint.
bool verify(CommitmentRecord &record, std::mt19937_64 &rng);

/// unveil + verify with a fresh seeded sampler.
bool verify(CommitmentRecord &record, const BitString &claimed, std::uint64_t rng_seed);

/// 1 - 2^{-(m - log2 n)}; requires m > log2 n.
double cheat_detection_probability(int message_bits, double committed_bits);

}  // namespace q3pen
