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
 * @file rotation.hpp
 * The amplitude-redistribution rotation R_n(φ).
 *
 * R_n(φ) is the 2^n x 2^n real orthogonal matrix with cos(φ/2) on the
 * diagonal and ±sin(φ/2)/√(2^n − 1) everywhere else. Signs follow the
 * recursive layout
 *
 *     R_1(φ)     = [[cos φ/2, −sin φ/2], [sin φ/2, cos φ/2]]
 *     R_{n+1}(φ) = [[√(1−a²) R_n(φ'), −a H_n], [a H_n, √(1−a²) R_n(φ')]]
 *
 * with a = √(2^n / (2^{n+1} − 1)) sin(φ/2). The block over the most
 * significant qubit comes first. Three constructions are provided: the
 * recursive block build, an entry-wise closed form, and a gate-level
 * decomposition.
 */
#pragma once

#include "qara/gates.hpp"
#include "qara/tensor.hpp"

#include <cstddef>
#include <cstdint>

namespace qara {

inline constexpr int kMaxRotationQubits = 12;

/// n-fold Kronecker power of the 2x2 Hadamard, 1 <= n <= 14.
[[nodiscard]] DenseOperator hadamard_n(int n);

/// Recursive block construction, 1 <= n <= 12.
[[nodiscard]] DenseOperator dense_rotation(int n, double phi);

/// Single entry of R_n(φ) from the closed-form sign rule. Works for any n
/// up to 62 without materializing the matrix.
[[nodiscard]] double rotation_entry(int n, double phi, std::uint64_t row,
                                    std::uint64_t col);

/// Sign (+1/−1) of off-diagonal entry (row, col) of R_n for sin(φ/2) > 0.
[[nodiscard]] int rotation_sign(std::uint64_t row, std::uint64_t col);

/// Angle ψ_k of the Y rotation inside the basis change of R_{k+1}:
/// the level-k sub-operator R_k(ψ_k) has cos(ψ_k/2) = √(2^k / (2^{k+1} − 1)).
[[nodiscard]] double basis_angle(int k);

/// Gate-level realization of R_n(φ) on qubits 0..n−1 (qubit n−1 is the most
/// significant): a forward ladder of controlled Hadamards and R_y(π/2), a
/// chain of controlled R_y(∓ψ_k), a central R_y(φ) on qubit n−1 and the
/// mirrored ladder.
[[nodiscard]] GateList decompose_rotation(int n, double phi);

struct GateMetrics {
    int n;
    std::size_t gate_count;
    std::size_t serial_depth;
    /// Depth when Hadamards that share one control set run in one step.
    std::size_t parallel_depth;
};

[[nodiscard]] GateMetrics gate_metrics(int n);

/// Depth of an arbitrary list under as-soon-as-possible layering.
[[nodiscard]] std::size_t circuit_depth(const GateList &list, bool merge_hadamards);

/// max|H_n R_n(φ) H_n − R_n(φ)ᵀ| <= 1e−11, n <= 8.
[[nodiscard]] bool verify_lemma_hrh(int n, double phi);

} // namespace qara
