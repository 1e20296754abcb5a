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
#include "qara/gates.hpp"

#include "qara/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qara {

namespace {

void validate(const GateOp &gate) {
    if (gate.target < 0) {
        throw std::invalid_argument("gate target must be non-negative");
    }
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
        const int q = gate.controls[i].qubit;
        if (q < 0) {
            throw std::invalid_argument("control qubit must be non-negative");
        }
        if (q == gate.target) {
            throw std::invalid_argument("control qubit " + std::to_string(q) +
                                        " coincides with the target");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.controls[j].qubit == q) {
                throw std::invalid_argument("duplicate control qubit " +
                                            std::to_string(q));
            }
        }
    }
}

} // namespace

GateOp GateOp::ry(int target, double angle, std::vector<Control> controls) {
    GateOp g{GateKind::RY, target, std::move(controls), angle};
    validate(g);
    return g;
}

GateOp GateOp::hadamard(int target, std::vector<Control> controls) {
    GateOp g{GateKind::HADAMARD, target, std::move(controls), 0.0};
    validate(g);
    return g;
}

GateOp GateOp::x(int target, std::vector<Control> controls) {
    GateOp g{GateKind::NOT, target, std::move(controls), 0.0};
    validate(g);
    return g;
}

std::array<double, 4> GateOp::matrix() const {
    switch (kind) {
    case GateKind::RY: {
        const double c = std::cos(angle / 2.0);
        const double s = std::sin(angle / 2.0);
        return {c, -s, s, c};
    }
    case GateKind::HADAMARD: {
        const double h = 1.0 / std::numbers::sqrt2;
        return {h, h, h, -h};
    }
    case GateKind::NOT:
        return {0.0, 1.0, 1.0, 0.0};
    }
    throw std::logic_error("unknown gate kind");
}

GateOp GateOp::inverse() const {
    GateOp g = *this;
    if (kind == GateKind::RY) {
        g.angle = -angle;
    }
    return g;
}

int GateOp::span_qubits() const {
    int top = target;
    for (const Control &c : controls) {
        top = std::max(top, c.qubit);
    }
    return top + 1;
}

GateList::GateList(int register_size) : register_size_(register_size) {
    if (register_size < 1) {
        throw std::invalid_argument("gate list register must hold at least one qubit");
    }
}

void GateList::push_back(GateOp gate) {
    validate(gate);
    if (gate.span_qubits() > register_size_) {
        throw std::out_of_range("gate touches qubit outside the " +
                                std::to_string(register_size_) + "-qubit register");
    }
    gates_.push_back(std::move(gate));
}

void GateList::append(const GateList &other) {
    for (const GateOp &g : other.gates_) {
        push_back(g);
    }
}

GateList GateList::inverse() const {
    GateList out(register_size_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

GateList GateList::widened(int register_size) const {
    if (register_size < register_size_) {
        throw std::invalid_argument("cannot shrink a gate list register");
    }
    GateList out(register_size);
    out.gates_ = gates_;
    return out;
}

GateList controlled(const GateList &list, const std::vector<Control> &extra_controls) {
    int size = list.register_size();
    for (const Control &c : extra_controls) {
        if (c.qubit >= 0 && c.qubit < list.register_size()) {
            throw std::invalid_argument("control qubit " + std::to_string(c.qubit) +
                                        " overlaps the controlled register");
        }
        size = std::max(size, c.qubit + 1);
    }
    GateList out(size);
    for (const GateOp &g : list.gates()) {
        GateOp cg = g;
        cg.controls.insert(cg.controls.end(), extra_controls.begin(),
                           extra_controls.end());
        out.push_back(std::move(cg));
    }
    return out;
}

DenseOperator evaluate_dense(const GateList &list) {
    const int n = list.register_size();
    DenseOperator out = DenseOperator::identity(n);
    const std::size_t dim = out.dim();
    // Column c of the product is the list applied to |c⟩.
    std::vector<double> column(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(column.begin(), column.end(), 0.0);
        column[c] = 1.0;
        kernels::apply_gates(column, n, list, kernels::Exec::Serial);
        for (std::size_t r = 0; r < dim; ++r) {
            out(r, c) = column[r];
        }
    }
    return out;
}

} // namespace qara
