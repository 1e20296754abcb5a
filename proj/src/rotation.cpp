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
#include "qara/rotation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qara {

namespace {

void check_range(int n, int lo, int hi, const char *what) {
    if (n < lo || n > hi) {
        throw std::invalid_argument(std::string(what) + ": n must be in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) +
                                    "], got " + std::to_string(n));
    }
}

double pow2(int k) { return std::ldexp(1.0, k); }

// Half-angle of the A-block sub-rotation: √(1−a²)·cos(φ'/2) = cos(φ/2) and
// √(1−a²)·sin(φ'/2)/√(2^k−1) = sin(φ/2)/√(2^{k+1}−1), k = sub-register size.
struct BlockSplit {
    double a;
    double inner_scale; // √(1−a²)
    double inner_half;  // φ'/2
};

BlockSplit split_block(int k, double half) {
    const double s = std::sin(half);
    const double c = std::cos(half);
    const double denom = pow2(k + 1) - 1.0;
    const double a = std::sqrt(pow2(k) / denom) * s;
    const double off = s * std::sqrt((pow2(k) - 1.0) / denom);
    return {a, std::hypot(c, off), std::atan2(off, c)};
}

DenseOperator build_rotation(int n, double half) {
    if (n == 1) {
        return ry(2.0 * half);
    }
    const int k = n - 1;
    const BlockSplit split = split_block(k, half);
    const DenseOperator inner = build_rotation(k, split.inner_half);
    const DenseOperator had = hadamard_n(k);
    const std::size_t d = inner.dim();
    DenseOperator out(n);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const double av = split.inner_scale * inner(r, c);
            const double bv = split.a * had(r, c);
            out(r, c) = av;
            out(r + d, c + d) = av;
            out(r, c + d) = -bv;
            out(r + d, c) = bv;
        }
    }
    return out;
}

// Qubits occupied by a gate, as a bit set.
std::uint64_t gate_footprint(const GateOp &g) {
    std::uint64_t bits = std::uint64_t{1} << g.target;
    for (const Control &c : g.controls) {
        bits |= std::uint64_t{1} << c.qubit;
    }
    return bits;
}

bool same_controls(const GateOp &a, const GateOp &b) {
    return a.controls == b.controls;
}

} // namespace

DenseOperator hadamard_n(int n) {
    check_range(n, 1, kMaxDenseQubits, "hadamard_n");
    DenseOperator out = hadamard_1();
    for (int i = 1; i < n; ++i) {
        out = kron(out, hadamard_1());
    }
    return out;
}

DenseOperator dense_rotation(int n, double phi) {
    check_range(n, 1, kMaxRotationQubits, "dense_rotation");
    return build_rotation(n, phi / 2.0);
}

int rotation_sign(std::uint64_t row, std::uint64_t col) {
    if (row == col) {
        return 1;
    }
    const int top = 63 - std::countl_zero(row ^ col);
    const std::uint64_t low = (std::uint64_t{1} << top) - 1;
    // Upper-right block carries −B, and B has the Walsh–Hadamard sign pattern.
    int sign = ((row >> top) & 1U) ? 1 : -1;
    if (std::popcount(row & col & low) % 2 != 0) {
        sign = -sign;
    }
    return sign;
}

double rotation_entry(int n, double phi, std::uint64_t row, std::uint64_t col) {
    check_range(n, 1, 62, "rotation_entry");
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (row >= dim || col >= dim) {
        throw std::out_of_range("rotation_entry: index outside the matrix");
    }
    if (row == col) {
        return std::cos(phi / 2.0);
    }
    return rotation_sign(row, col) * std::sin(phi / 2.0) / std::sqrt(pow2(n) - 1.0);
}

double basis_angle(int k) {
    check_range(k, 1, 62, "basis_angle");
    return 2.0 * std::acos(std::sqrt(pow2(k) / (pow2(k + 1) - 1.0)));
}

GateList decompose_rotation(int n, double phi) {
    check_range(n, 1, 62, "decompose_rotation");
    GateList forward(n);
    // Basis-change ladder, outermost level first.
    for (int level = n; level >= 2; --level) {
        const int top = level - 1;
        for (int q = 0; q < top; ++q) {
            forward.push_back(GateOp::hadamard(q, {{top, Polarity::OnOne}}));
        }
        forward.push_back(GateOp::ry(top, std::numbers::pi / 2.0));
    }
    // Controlled Y rotations, innermost level first.
    for (int level = 2; level <= n; ++level) {
        forward.push_back(GateOp::ry(level - 2, -basis_angle(level - 1),
                                     {{level - 1, Polarity::OnOne}}));
    }
    GateList out = forward;
    out.push_back(GateOp::ry(n - 1, phi));
    out.append(forward.inverse());
    return out;
}

std::size_t circuit_depth(const GateList &list, bool merge_hadamards) {
    std::vector<std::size_t> ready(static_cast<std::size_t>(list.register_size()), 0);
    std::size_t depth = 0;
    const auto &gates = list.gates();
    std::size_t i = 0;
    while (i < gates.size()) {
        std::uint64_t footprint = gate_footprint(gates[i]);
        std::size_t j = i + 1;
        if (merge_hadamards && gates[i].kind == GateKind::HADAMARD &&
            !gates[i].controls.empty()) {
            while (j < gates.size() && gates[j].kind == GateKind::HADAMARD &&
                   same_controls(gates[i], gates[j])) {
                footprint |= gate_footprint(gates[j]);
                ++j;
            }
        }
        std::size_t layer = 0;
        for (int q = 0; q < list.register_size(); ++q) {
            if ((footprint >> q) & 1U) {
                layer = std::max(layer, ready[static_cast<std::size_t>(q)]);
            }
        }
        ++layer;
        for (int q = 0; q < list.register_size(); ++q) {
            if ((footprint >> q) & 1U) {
                ready[static_cast<std::size_t>(q)] = layer;
            }
        }
        depth = std::max(depth, layer);
        i = j;
    }
    return depth;
}

GateMetrics gate_metrics(int n) {
    const GateList list = decompose_rotation(n, 1.0);
    return {n, list.size(), circuit_depth(list, false), circuit_depth(list, true)};
}

bool verify_lemma_hrh(int n, double phi) {
    check_range(n, 1, 8, "verify_lemma_hrh");
    const DenseOperator h = hadamard_n(n);
    const DenseOperator r = dense_rotation(n, phi);
    const DenseOperator hrh = mat_mul(mat_mul(h, r), h);
    return approx_equal(hrh, r.transpose(), 1e-11);
}

} // namespace qara
