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
 * @file tensor.hpp
 * Dense real operators and state vectors over a qubit register.
 *
 * Basis index bit q corresponds to qubit q (qubit 0 is the least significant).
 * In kron(a, b) the qubits of `a` become the high qubits of the result.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qara {

/// Largest register for which dense matrices may be materialized.
inline constexpr int kMaxDenseQubits = 14;

class StateVector;

/// Square real matrix of dimension 2^num_qubits, row-major.
class DenseOperator {
  public:
    /// Zero matrix over `num_qubits` qubits.
    explicit DenseOperator(int num_qubits);
    DenseOperator(int num_qubits, std::vector<double> entries);

    static DenseOperator identity(int num_qubits);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    double &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] std::span<const double> entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] DenseOperator transpose() const;
    [[nodiscard]] DenseOperator scaled(double factor) const;

    /// max |MᵀM − I|
    [[nodiscard]] double orthogonality_defect() const;
    [[nodiscard]] bool is_orthogonal(double tol = 1e-12) const {
        return orthogonality_defect() <= tol;
    }

    [[nodiscard]] StateVector apply(const StateVector &state) const;

  private:
    int num_qubits_;
    std::size_t dim_;
    std::vector<double> entries_;
};

/// Real amplitudes of a register. Normalization is checked on construction.
class StateVector {
  public:
    static constexpr double kNormTolerance = 1e-10;

    StateVector(int num_qubits, std::vector<double> amplitudes);

    /// |index⟩
    static StateVector basis(int num_qubits, std::size_t index);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const double> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return amplitudes_[i]; }
    [[nodiscard]] double norm_squared() const;

  private:
    int num_qubits_;
    std::vector<double> amplitudes_;
};

[[nodiscard]] DenseOperator mat_mul(const DenseOperator &a, const DenseOperator &b);
[[nodiscard]] DenseOperator kron(const DenseOperator &a, const DenseOperator &b);
[[nodiscard]] double max_abs_diff(const DenseOperator &a, const DenseOperator &b);
[[nodiscard]] bool approx_equal(const DenseOperator &a, const DenseOperator &b,
                                double tol);

/// Single-qubit constants.
[[nodiscard]] DenseOperator pauli_x();
[[nodiscard]] DenseOperator hadamard_1();
/// Y-axis Bloch rotation [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]].
[[nodiscard]] DenseOperator ry(double angle);

} // namespace qara
