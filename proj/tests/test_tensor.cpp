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
#include <doctest.h>

#include "qara/rotation.hpp"
#include "qara/tensor.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace qara;

namespace {

// 2x2 rotation written out by hand, independent of ry()/dense_rotation().
DenseOperator rot2(double phi) {
    return DenseOperator(1, {std::cos(phi / 2), -std::sin(phi / 2), std::sin(phi / 2),
                             std::cos(phi / 2)});
}

} // namespace

TEST_CASE("mat_mul examples") {
    const auto id = DenseOperator::identity(1);
    CHECK(approx_equal(mat_mul(id, id), id, 0.0));
    CHECK(approx_equal(mat_mul(hadamard_1(), hadamard_1()), id, 1e-15));

    const double pi = std::numbers::pi;
    const auto prod = mat_mul(dense_rotation(1, pi / 3), dense_rotation(1, pi / 6));
    CHECK(approx_equal(prod, rot2(pi / 2), 1e-15));

    CHECK_THROWS_AS((void)mat_mul(DenseOperator::identity(1), DenseOperator::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("kron examples") {
    CHECK(approx_equal(kron(DenseOperator::identity(1), DenseOperator::identity(1)),
                       DenseOperator::identity(2), 0.0));
    CHECK(approx_equal(kron(hadamard_1(), hadamard_1()), hadamard_n(2), 0.0));

    // X on the high qubit of |00⟩ gives |10⟩ = index 2.
    const auto xi = kron(pauli_x(), DenseOperator::identity(1));
    const auto out = xi.apply(StateVector::basis(2, 0));
    CHECK(out[2] == 1.0);
    CHECK(out[0] == 0.0);
    CHECK(out.num_qubits() == 2);
}

TEST_CASE("approx_equal examples") {
    const auto id = DenseOperator::identity(2);
    CHECK(approx_equal(id, id, 1e-12));

    const auto a = rot2(0.1);
    const auto b = rot2(0.1 + 1e-6);
    // Largest entry change is ≈ 0.5e-6·cos(0.05).
    CHECK(max_abs_diff(a, b) == doctest::Approx(0.5e-6 * std::cos(0.05)).epsilon(1e-4));
    CHECK_FALSE(approx_equal(a, b, 1e-12));
    CHECK(approx_equal(a, b, 1e-3));
    CHECK_THROWS_AS((void)approx_equal(a, id, 1.0), std::invalid_argument);
}

TEST_CASE("kron is associative entry for entry") {
    const auto a = rot2(0.7);
    const auto b = hadamard_1();
    const auto c = rot2(-1.3);
    const auto left = kron(kron(a, b), c);
    const auto right = kron(a, kron(b, c));
    CHECK(max_abs_diff(left, right) == 0.0);
}

TEST_CASE("products of orthogonal operators stay orthogonal") {
    const auto angles = testing::random_angles(20, 11);
    for (std::size_t i = 0; i + 1 < angles.size(); i += 2) {
        const auto a = kron(rot2(angles[i]), hadamard_1());
        const auto b = kron(hadamard_1(), rot2(angles[i + 1]));
        CHECK(mat_mul(a, b).orthogonality_defect() <= 1e-11);
    }
}

TEST_CASE("orthogonal apply preserves normalization") {
    const auto angles = testing::random_angles(8, 5);
    const auto op = kron(kron(rot2(angles[0]), rot2(angles[1])), hadamard_1());
    std::vector<double> amps(8);
    double norm = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        amps[i] = angles[i];
        norm += angles[i] * angles[i];
    }
    for (double &v : amps) {
        v /= std::sqrt(norm);
    }
    const StateVector psi(3, amps);
    CHECK(std::abs(op.apply(psi).norm_squared() - 1.0) <= 1e-10);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(DenseOperator(0), std::invalid_argument);
    CHECK_THROWS_AS(DenseOperator(kMaxDenseQubits + 1), std::invalid_argument);
    CHECK_THROWS_AS(DenseOperator(1, {1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0}), std::invalid_argument);
}
