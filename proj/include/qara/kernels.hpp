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
 * @file kernels.hpp
 * Data-parallel inner loops. Each OpenMP kernel has a serial twin with the
 * same arithmetic in the same order per output element; tests compare them
 * bit-for-bit and bench/ times them against each other.
 */
#pragma once

#include "qara/gates.hpp"

#include <span>
#include <vector>

namespace qara::kernels {

enum class Exec { Serial, Parallel };

/// Applies one controlled single-qubit gate in place to 2^num_qubits amplitudes.
void apply_gate_serial(std::span<double> amps, int num_qubits, const GateOp &gate);
void apply_gate_parallel(std::span<double> amps, int num_qubits, const GateOp &gate);

void apply_gate(std::span<double> amps, int num_qubits, const GateOp &gate,
                Exec exec);
void apply_gates(std::span<double> amps, int num_qubits, const GateList &list,
                 Exec exec);

/// Marginal probability of the low `low_qubits` qubits:
/// out[k] = Σ_hi amps[hi·2^low + k]².
std::vector<double> marginal_low_serial(std::span<const double> amps, int low_qubits);
std::vector<double> marginal_low_parallel(std::span<const double> amps, int low_qubits);

/// out[k] = (1/M) Σ_j column_j[k]² where column j of the branch operator is
/// the rotation R_m(2·half_angles[j]) applied to e_j.
std::vector<double> branch_marginal_serial(std::span<const double> half_angles);
std::vector<double> branch_marginal_parallel(std::span<const double> half_angles);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

} // namespace qara::kernels
