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
#include "qara/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qara {

namespace {

void check_dense_size(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense operator needs 1.." + std::to_string(kMaxDenseQubits) +
            " qubits, got " + std::to_string(num_qubits));
    }
}

void check_same_shape(const DenseOperator &a, const DenseOperator &b,
                      const char *what) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(what) +
                                    ": dimension mismatch (" +
                                    std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + " qubits)");
    }
}

} // namespace

DenseOperator::DenseOperator(int num_qubits)
    : num_qubits_(num_qubits), dim_(0) {
    check_dense_size(num_qubits);
    dim_ = std::size_t{1} << num_qubits;
    entries_.assign(dim_ * dim_, 0.0);
}

DenseOperator::DenseOperator(int num_qubits, std::vector<double> entries)
    : DenseOperator(num_qubits) {
    if (entries.size() != dim_ * dim_) {
        throw std::invalid_argument("entry count does not match 2^n x 2^n");
    }
    entries_ = std::move(entries);
}

DenseOperator DenseOperator::identity(int num_qubits) {
    DenseOperator out(num_qubits);
    for (std::size_t i = 0; i < out.dim_; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

DenseOperator DenseOperator::transpose() const {
    DenseOperator out(num_qubits_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

DenseOperator DenseOperator::scaled(double factor) const {
    DenseOperator out = *this;
    for (double &v : out.entries_) {
        v *= factor;
    }
    return out;
}

double DenseOperator::orthogonality_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) {
                dot += (*this)(k, i) * (*this)(k, j);
            }
            const double expected = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expected));
        }
    }
    return worst;
}

StateVector DenseOperator::apply(const StateVector &state) const {
    if (state.num_qubits() != num_qubits_) {
        throw std::invalid_argument("apply: state/operator size mismatch");
    }
    std::vector<double> out(dim_, 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t r = 0; r < dim_; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += (*this)(r, c) * amps[c];
        }
        out[r] = acc;
    }
    return StateVector(num_qubits_, std::move(out));
}

StateVector::StateVector(int num_qubits, std::vector<double> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits < 1 || num_qubits > 30 ||
        amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("state vector length must be 2^num_qubits");
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("basis: bad register size");
    }
    std::vector<double> amps(std::size_t{1} << num_qubits, 0.0);
    if (index >= amps.size()) {
        throw std::out_of_range("basis index outside register");
    }
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (double a : amplitudes_) {
        acc += a * a;
    }
    return acc;
}

DenseOperator mat_mul(const DenseOperator &a, const DenseOperator &b) {
    check_same_shape(a, b, "mat_mul");
    const std::size_t n = a.dim();
    DenseOperator out(a.num_qubits());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const double lhs = a(r, k);
            if (lhs == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.num_qubits() + b.num_qubits());
    const std::size_t db = b.dim();
    for (std::size_t ra = 0; ra < a.dim(); ++ra) {
        for (std::size_t ca = 0; ca < a.dim(); ++ca) {
            const double scale = a(ra, ca);
            for (std::size_t rb = 0; rb < db; ++rb) {
                for (std::size_t cb = 0; cb < db; ++cb) {
                    out(ra * db + rb, ca * db + cb) = scale * b(rb, cb);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    check_same_shape(a, b, "max_abs_diff");
    const auto ea = a.entries();
    const auto eb = b.entries();
    double worst = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

bool approx_equal(const DenseOperator &a, const DenseOperator &b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

DenseOperator pauli_x() { return DenseOperator(1, {0.0, 1.0, 1.0, 0.0}); }

DenseOperator hadamard_1() {
    const double h = 1.0 / std::numbers::sqrt2;
    return DenseOperator(1, {h, h, h, -h});
}

DenseOperator ry(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return DenseOperator(1, {c, -s, s, c});
}

} // namespace qara
