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
#include "qara/kernels.hpp"

#include "qara/rotation.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qara::kernels {

namespace {

struct PreparedGate {
    std::array<double, 4> m;
    std::uint64_t target_bit;
    std::uint64_t low_mask;
    std::uint64_t on_mask;
    std::uint64_t off_mask;
};

PreparedGate prepare(std::size_t size, int num_qubits, const GateOp &gate) {
    if (size != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude buffer length must be 2^num_qubits");
    }
    if (gate.span_qubits() > num_qubits) {
        throw std::out_of_range("gate touches a qubit outside the state");
    }
    PreparedGate p{gate.matrix(), std::uint64_t{1} << gate.target,
                   (std::uint64_t{1} << gate.target) - 1, 0, 0};
    for (const Control &c : gate.controls) {
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        (c.polarity == Polarity::OnOne ? p.on_mask : p.off_mask) |= bit;
    }
    return p;
}

// Index of the pair partner with the target bit clear.
inline std::uint64_t pair_base(const PreparedGate &p, std::uint64_t i) {
    return ((i & ~p.low_mask) << 1) | (i & p.low_mask);
}

inline void update_pair(double *a, const PreparedGate &p, std::uint64_t i) {
    const std::uint64_t i0 = pair_base(p, i);
    if ((i0 & p.on_mask) != p.on_mask || (i0 & p.off_mask) != 0) {
        return;
    }
    const std::uint64_t i1 = i0 | p.target_bit;
    const double v0 = a[i0];
    const double v1 = a[i1];
    a[i0] = p.m[0] * v0 + p.m[1] * v1;
    a[i1] = p.m[2] * v0 + p.m[3] * v1;
}

inline double branch_term(int m, double half_angle, std::uint64_t k, std::uint64_t j) {
    const double v = rotation_entry(m, 2.0 * half_angle, k, j);
    return v * v;
}

int log2_exact(std::size_t n) {
    int m = 0;
    while ((std::size_t{1} << m) < n) {
        ++m;
    }
    if ((std::size_t{1} << m) != n || m < 1) {
        throw std::invalid_argument("branch count must be a power of two >= 2");
    }
    return m;
}

} // namespace

void apply_gate_serial(std::span<double> amps, int num_qubits, const GateOp &gate) {
    const PreparedGate p = prepare(amps.size(), num_qubits, gate);
    const std::uint64_t pairs = amps.size() / 2;
    double *a = amps.data();
    for (std::uint64_t i = 0; i < pairs; ++i) {
        update_pair(a, p, i);
    }
}

void apply_gate_parallel(std::span<double> amps, int num_qubits, const GateOp &gate) {
    const PreparedGate p = prepare(amps.size(), num_qubits, gate);
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
    double *a = amps.data();
#pragma omp parallel for schedule(static) if (pairs >= 4096)
    for (std::int64_t i = 0; i < pairs; ++i) {
        update_pair(a, p, static_cast<std::uint64_t>(i));
    }
}

void apply_gate(std::span<double> amps, int num_qubits, const GateOp &gate,
                Exec exec) {
    if (exec == Exec::Parallel) {
        apply_gate_parallel(amps, num_qubits, gate);
    } else {
        apply_gate_serial(amps, num_qubits, gate);
    }
}

void apply_gates(std::span<double> amps, int num_qubits, const GateList &list,
                 Exec exec) {
    for (const GateOp &g : list.gates()) {
        apply_gate(amps, num_qubits, g, exec);
    }
}

std::vector<double> marginal_low_serial(std::span<const double> amps, int low_qubits) {
    const std::size_t width = std::size_t{1} << low_qubits;
    if (amps.size() % width != 0) {
        throw std::invalid_argument("marginal: register smaller than the kept qubits");
    }
    std::vector<double> out(width, 0.0);
    const std::size_t rows = amps.size() / width;
    for (std::size_t k = 0; k < width; ++k) {
        double acc = 0.0;
        for (std::size_t hi = 0; hi < rows; ++hi) {
            const double v = amps[hi * width + k];
            acc += v * v;
        }
        out[k] = acc;
    }
    return out;
}

std::vector<double> marginal_low_parallel(std::span<const double> amps, int low_qubits) {
    const std::size_t width = std::size_t{1} << low_qubits;
    if (amps.size() % width != 0) {
        throw std::invalid_argument("marginal: register smaller than the kept qubits");
    }
    std::vector<double> out(width, 0.0);
    const auto rows = amps.size() / width;
    const auto kmax = static_cast<std::int64_t>(width);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < kmax; ++k) {
        double acc = 0.0;
        for (std::size_t hi = 0; hi < rows; ++hi) {
            const double v = amps[hi * width + static_cast<std::size_t>(k)];
            acc += v * v;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

std::vector<double> branch_marginal_serial(std::span<const double> half_angles) {
    const std::size_t count = half_angles.size();
    const int m = log2_exact(count);
    std::vector<double> out(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            acc += branch_term(m, half_angles[j], k, j);
        }
        out[k] = acc / static_cast<double>(count);
    }
    return out;
}

std::vector<double> branch_marginal_parallel(std::span<const double> half_angles) {
    const std::size_t count = half_angles.size();
    const int m = log2_exact(count);
    std::vector<double> out(count, 0.0);
    const auto kmax = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) if (count >= 64)
    for (std::int64_t k = 0; k < kmax; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            acc += branch_term(m, half_angles[j], static_cast<std::uint64_t>(k), j);
        }
        out[static_cast<std::size_t>(k)] = acc / static_cast<double>(count);
    }
    return out;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace qara::kernels
