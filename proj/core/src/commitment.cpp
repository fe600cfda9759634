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

#include "q3pen/commitment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "q3pen/errors.hpp"

namespace q3pen {

namespace {

constexpr int kMaxCodeAttempts = 20000;
// Draws spent looking for a code whose weights also stay below m - ceil(r m).
constexpr int kTwoSidedAttempts = 2000;

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

BitString BitString::from_value(std::uint64_t value, int length) {
    if (length < 1 || length > 63) throw ArgumentError("bit string length must be in [1, 63]");
    if (value >> length) throw ArgumentError("value " + std::to_string(value) + " does not fit in " +
                                             std::to_string(length) + " bits");
    return BitString{value, length};
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int k = 0; k < length; ++k) {
        if ((bits >> k) & 1U) s[static_cast<std::size_t>(length - 1 - k)] = '1';
    }
    return s;
}

int hamming_distance(std::span<const std::uint8_t> lhs, std::span<const std::uint8_t> rhs) {
    if (lhs.size() != rhs.size()) throw ArgumentError("hamming distance of different lengths");
    int d = 0;
    for (std::size_t k = 0; k < lhs.size(); ++k) d += lhs[k] != rhs[k];
    return d;
}

int codeword_length(int message_bits, double expansion) {
    if (message_bits < 1 || message_bits > LinearCode::kMaxMessageBits) {
        throw ArgumentError("message length must be in [1, " + std::to_string(LinearCode::kMaxMessageBits) + "]");
    }
    if (!(expansion > 1.0)) throw ArgumentError("code expansion c must exceed 1");
    const int m = static_cast<int>(std::ceil(expansion * message_bits - 1e-9));
    if (m <= message_bits) throw ArgumentError("codeword must be longer than the message");
    if (m > 4096) throw ArgumentError("codeword length too large");
    return m;
}

int fingerprint_qubits(int codeword_bits) {
    if (codeword_bits < 1) throw ArgumentError("empty codeword");
    return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(codeword_bits - 1))));
}

// ---------------------------------------------------------------------------

LinearCode::LinearCode(int message_bits, double expansion, std::vector<std::uint64_t> columns)
    : message_bits_(message_bits), expansion_(expansion), columns_(std::move(columns)) {
    const int m = codeword_bits();
    min_weight_ = m;
    max_weight_ = 0;
    const std::uint64_t count = std::uint64_t{1} << message_bits_;
    for (std::uint64_t x = 1; x < count; ++x) {
        int w = 0;
        for (auto col : columns_) w += parity(x & col);
        min_weight_ = std::min(min_weight_, w);
        max_weight_ = std::max(max_weight_, w);
    }
}

double LinearCode::relative_distance() const {
    const int m = codeword_bits();
    return static_cast<double>(std::min(min_weight_, m - max_weight_)) / m;
}

LinearCode LinearCode::random(int message_bits, double expansion, std::uint64_t seed, double min_relative_distance) {
    const int m = codeword_length(message_bits, expansion);
    if (!(min_relative_distance > 0.0) || min_relative_distance > 0.5) {
        throw ArgumentError("minimum relative distance must be in (0, 1/2]");
    }
    const int floor_weight = static_cast<int>(std::ceil(min_relative_distance * m - 1e-9));
    const std::uint64_t span = std::uint64_t{1} << message_bits;  // all-zero columns allowed

    std::mt19937_64 rng(seed);
    std::optional<LinearCode> best;
    for (int attempt = 0; attempt < kMaxCodeAttempts; ++attempt) {
        std::vector<std::uint64_t> columns(static_cast<std::size_t>(m));
        for (auto &col : columns) col = rng() % span;
        LinearCode code(message_bits, expansion, std::move(columns));
        // An all-ones codeword would make two fingerprints differ only by a global sign.
        if (code.min_weight() < floor_weight || code.max_weight() >= m) continue;
        if (code.max_weight() <= m - floor_weight) return code;
        if (!best || code.relative_distance() > best->relative_distance()) best = std::move(code);
        if (attempt + 1 >= kTwoSidedAttempts) return std::move(*best);
    }
    if (best) return std::move(*best);
    throw ConstructionError("no code with relative distance " + std::to_string(min_relative_distance) +
                            " found for n=" + std::to_string(message_bits) + ", m=" + std::to_string(m) +
                            "; lower the distance floor or raise c");
}

LinearCode LinearCode::parity_repetition(int message_bits, double expansion) {
    const int m = codeword_length(message_bits, expansion);
    std::vector<std::uint64_t> columns;
    columns.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < message_bits; ++k) columns.push_back(std::uint64_t{1} << k);
    for (int j = 0; static_cast<int>(columns.size()) < m; ++j) {
        const int k = j % message_bits;
        const int next = (k + 1) % message_bits;
        columns.push_back(next == k ? std::uint64_t{1} << k : (std::uint64_t{1} << k) | (std::uint64_t{1} << next));
    }
    LinearCode code(message_bits, expansion, std::move(columns));
    if (code.relative_distance() <= 0.0) {
        throw ConstructionError("parity-repetition code has no usable distance for these parameters");
    }
    return code;
}

std::vector<std::uint8_t> LinearCode::encode(const BitString &message) const {
    if (message.length != message_bits_) {
        throw ArgumentError("message has " + std::to_string(message.length) + " bits, code expects " +
                            std::to_string(message_bits_));
    }
    std::vector<std::uint8_t> word(columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j) word[j] = static_cast<std::uint8_t>(parity(message.bits & columns_[j]));
    return word;
}

// ---------------------------------------------------------------------------

StateVector fingerprint_state(const LinearCode &code, const BitString &message) {
    const auto word = code.encode(message);
    const int m = code.codeword_bits();
    const int q = fingerprint_qubits(m);
    std::vector<Amplitude> amps(std::size_t{1} << q, Amplitude{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (int j = 0; j < m; ++j) amps[static_cast<std::size_t>(j)] = word[static_cast<std::size_t>(j)] ? -scale : scale;
    return prepare_amplitudes(q, std::move(amps));
}

double acceptance_probability(const LinearCode &code, const BitString &committed, const BitString &unveiled) {
    return std::norm(inner_product(fingerprint_state(code, unveiled), fingerprint_state(code, committed)));
}

std::string_view commit_phase_name(CommitPhase phase) {
    switch (phase) {
        case CommitPhase::kCommitted:
            return "committed";
        case CommitPhase::kUnveiled:
            return "unveiled";
        case CommitPhase::kAccepted:
            return "verified-accept";
        case CommitPhase::kRejected:
            return "verified-reject";
    }
    return "?";
}

CommitmentRecord commit(const BitString &message, const LinearCode &code) {
    return CommitmentRecord(fingerprint_state(code, message), message.length, code);
}

void unveil(CommitmentRecord &record, const BitString &claimed) {
    if (record.phase_ != CommitPhase::kCommitted) {
        throw StateError(std::string("cannot unveil a commitment in phase ") +
                         std::string(commit_phase_name(record.phase_)));
    }
    if (claimed.length != record.committed_length_) throw ArgumentError("unveiled string has the wrong length");
    record.unveiled_ = claimed;
    record.phase_ = CommitPhase::kUnveiled;
}

bool verify(CommitmentRecord &record, std::mt19937_64 &rng) {
    if (record.phase_ != CommitPhase::kUnveiled) {
        throw StateError(std::string("cannot verify a commitment in phase ") +
                         std::string(commit_phase_name(record.phase_)));
    }
    const StateVector expected = fingerprint_state(record.code_, *record.unveiled_);
    const Amplitude overlap = inner_product(expected, record.fingerprint_);
    double p = std::clamp(std::norm(overlap), 0.0, 1.0);
    if (p > 1.0 - 1e-12) p = 1.0;
    if (p < 1e-12) p = 0.0;
    record.accept_probability_ = p;

    const bool accepted = uniform01(rng) < p;
    // Post-measurement state: the projection onto |tau> or onto its complement.
    auto amps = record.fingerprint_.mutable_amplitudes();
    const auto axis = expected.amplitudes();
    if (accepted) {
        const Amplitude phase = overlap / std::abs(overlap);
        for (std::size_t k = 0; k < amps.size(); ++k) amps[k] = phase * axis[k];
    } else {
        double rest = 0.0;
        for (std::size_t k = 0; k < amps.size(); ++k) {
            amps[k] -= overlap * axis[k];
            rest += std::norm(amps[k]);
        }
        const double scale = 1.0 / std::sqrt(rest);
        for (auto &a : amps) a *= scale;
    }
    record.phase_ = accepted ? CommitPhase::kAccepted : CommitPhase::kRejected;
    return accepted;
}

bool verify(CommitmentRecord &record, const BitString &claimed, std::uint64_t rng_seed) {
    unveil(record, claimed);
    std::mt19937_64 rng(rng_seed);
    return verify(record, rng);
}

double cheat_detection_probability(int message_bits, double committed_bits) {
    if (message_bits < 1) throw ArgumentError("message length must be positive");
    const double exponent = committed_bits - std::log2(static_cast<double>(message_bits));
    if (!(exponent > 0.0)) throw ArgumentError("committed length m must exceed log2 n");
    return 1.0 - std::exp2(-exponent);
}

}  // namespace q3pen
