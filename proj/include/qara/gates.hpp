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
 * @file gates.hpp
 * Elementary (multi-)controlled single-qubit gates and ordered gate lists.
 *
 * List index 0 is applied to the state first; evaluating a list densely
 * therefore multiplies the gate matrices in reverse list order.
 */
#pragma once

#include "qara/tensor.hpp"

#include <array>
#include <vector>

namespace qara {

enum class GateKind { RY, HADAMARD, NOT };

enum class Polarity { OnOne, OnZero };

struct Control {
    int qubit;
    Polarity polarity = Polarity::OnOne;

    friend bool operator==(const Control &, const Control &) = default;
};

struct GateOp {
    GateKind kind;
    int target;
    std::vector<Control> controls;
    double angle = 0.0; ///< radians, meaningful for RY only

    static GateOp ry(int target, double angle, std::vector<Control> controls = {});
    static GateOp hadamard(int target, std::vector<Control> controls = {});
    static GateOp x(int target, std::vector<Control> controls = {});

    /// Row-major 2x2 matrix acting on the target qubit.
    [[nodiscard]] std::array<double, 4> matrix() const;
    [[nodiscard]] GateOp inverse() const;
    /// Highest qubit index touched, plus one.
    [[nodiscard]] int span_qubits() const;
};

class GateList {
  public:
    explicit GateList(int register_size);

    /// Appends after validating qubit indices against the register.
    void push_back(GateOp gate);
    void append(const GateList &other);

    [[nodiscard]] int register_size() const noexcept { return register_size_; }
    [[nodiscard]] const std::vector<GateOp> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    /// Reversed order with each gate inverted.
    [[nodiscard]] GateList inverse() const;
    /// Same gates on a larger register.
    [[nodiscard]] GateList widened(int register_size) const;

  private:
    int register_size_;
    std::vector<GateOp> gates_;
};

/// Adds `extra_controls` to every gate. The control qubits must lie outside
/// the list's register; the register grows to include them.
[[nodiscard]] GateList controlled(const GateList &list,
                                  const std::vector<Control> &extra_controls);

/// Dense operator realized by the list (register_size <= kMaxDenseQubits).
[[nodiscard]] DenseOperator evaluate_dense(const GateList &list);

} // namespace qara
