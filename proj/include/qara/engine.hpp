// Copyright 2026 The QARA Filter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file engine.hpp
 * Amplitude redistribution over a window of integers.
 *
 * A window of M = 2^m values d^j (n bits each) is loaded into a data register
 * entangled with a uniformly superposed counter register. For every data bit
 * i, R_m(±π·2^i/2^n) acts on the counter, conditioned on the reference bit
 * r_i and the data bit d_i. Branch j ends up rotated by R_m(2θ_j) with
 *
 *     θ_j = π (r − d^j) / 2^{n+1},
 *
 * so when all loaded words are distinct
 *
 *     P(k) = (1/M) [cos²θ_k + (1/(M−1)) Σ_{j≠k} sin²θ_j].
 *
 * Three backends compute the counter marginal: the closed form above, an
 * O(M²) sum over non-interfering branches and a full statevector run of the
 * circuit.
 */
#pragma once

#include "qara/kernels.hpp"
#include "qara/random.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qara {

/// Statevector runs are limited to this many simulated qubits.
inline constexpr int kMaxStatevectorQubits = 22;
inline constexpr int kMaxBitWidth = 32;

/// Raised when a window cannot be simulated qubit-by-qubit.
class RegisterTooLarge : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Raised when the closed form or branch backend is asked to handle
/// duplicate words (the branches would interfere).
class DuplicateValues : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct RegisterGeometry {
    std::size_t window_size; ///< M
    int index_qubits;        ///< m = log2 M
    int bit_width;           ///< n
    bool unique_mode;        ///< index appended below the value bits

    [[nodiscard]] int data_qubits() const noexcept {
        return bit_width + (unique_mode ? index_qubits : 0);
    }
    [[nodiscard]] int total_qubits() const noexcept {
        return index_qubits + data_qubits();
    }
};

class EncodedWindow {
  public:
    EncodedWindow(RegisterGeometry geometry, std::vector<std::uint64_t> values,
                  std::uint64_t reference);

    [[nodiscard]] const RegisterGeometry &geometry() const noexcept { return geometry_; }
    [[nodiscard]] std::span<const std::uint64_t> values() const noexcept { return values_; }
    [[nodiscard]] std::uint64_t reference() const noexcept { return reference_; }

    /// Words held by the data register: value·2^m + index in unique mode,
    /// the plain value otherwise.
    [[nodiscard]] std::vector<std::uint64_t> data_words() const;
    /// True when two data words coincide (only possible without unique mode).
    [[nodiscard]] bool has_duplicate_words() const;

  private:
    RegisterGeometry geometry_;
    std::vector<std::uint64_t> values_;
    std::uint64_t reference_;
};

/// Validates and wraps a window; the length must be a power of two >= 2.
[[nodiscard]] EncodedWindow encode_window(std::span<const std::uint64_t> values,
                                          std::uint64_t reference, int bit_width,
                                          bool unique_mode);

/// Probability vector over window indices.
class Distribution {
  public:
    static constexpr double kSumTolerance = 1e-10;

    explicit Distribution(std::vector<double> probs);

    [[nodiscard]] std::span<const double> probs() const noexcept { return probs_; }
    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return probs_[i]; }
    /// Highest probability, lowest index on ties.
    [[nodiscard]] std::size_t argmax() const;

  private:
    std::vector<double> probs_;
};

[[nodiscard]] double max_abs_diff(const Distribution &a, const Distribution &b);

/// Branch half-angles θ_j = π(r − d^j)/2^{n+1}.
struct BranchAngleTable {
    std::vector<double> thetas;
};

/// Computes θ_j both from the closed form and as the per-bit sum
/// Σ_i π(r_i − d_i^j)/2^{n−i+1}; throws std::logic_error if they differ by
/// more than 1e−14.
[[nodiscard]] BranchAngleTable branch_angles(const EncodedWindow &w);

/// Matrix angle of the rotation conditioned on data bit i (half of it is
/// the bit's contribution to θ).
[[nodiscard]] double bit_rotation_angle(int bit, int bit_width);

[[nodiscard]] Distribution analytic_distribution(const EncodedWindow &w);

[[nodiscard]] Distribution simulate_statevector(
    const EncodedWindow &w, kernels::Exec exec = kernels::Exec::Parallel);

[[nodiscard]] Distribution simulate_branches(
    const EncodedWindow &w, kernels::Exec exec = kernels::Exec::Parallel);

/// Multinomial draw of `shots` measurements; deterministic for a seed.
[[nodiscard]] std::vector<std::uint64_t> sample_index(const Distribution &dist,
                                                      std::uint64_t shots,
                                                      std::uint64_t seed);

/// One measurement using the caller's generator.
[[nodiscard]] std::size_t sample_once(const Distribution &dist, Rng &rng);

enum class Backend { Analytic, Branches, Statevector };

struct RunMode {
    enum class Kind { Sampled, Argmax };
    Kind kind = Kind::Argmax;
    std::uint64_t seed = 0;

    static RunMode argmax() { return {Kind::Argmax, 0}; }
    static RunMode sampled(std::uint64_t seed) { return {Kind::Sampled, seed}; }
};

struct QaraResult {
    std::size_t index;
    std::uint64_t value; ///< the original window element at `index`
};

/// Distribution of the counter register with the requested backend.
[[nodiscard]] Distribution distribution(const EncodedWindow &w, Backend backend);

/// Full run: encode, redistribute, measure once (or take the argmax).
/// Without unique mode and with duplicate values the statevector backend is
/// used regardless of `backend`.
[[nodiscard]] QaraResult run_qara(std::span<const std::uint64_t> values,
                                  std::uint64_t reference, int bit_width, RunMode mode,
                                  bool unique_mode = true,
                                  Backend backend = Backend::Analytic);

/// Outlier probability (1/M)cos²(π/2 − π/2^{n+1}) when a single all-ones
/// outlier sits among elements equal to the reference.
[[nodiscard]] double best_case_probability(std::size_t window_size, int bit_width);

/// Upper bound (1/M)(cos²(π/4 − π/2^{l+2}) + sin²(π/2^{l+p+1})) on the
/// outlier probability when d^k >= 2^l·r and |d^j − r| <= r/2^p.
[[nodiscard]] double outlier_bound(std::size_t window_size, int bit_width, int l, int p);

} // namespace qara
