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
#include "qara/engine.hpp"

#include "qara/rotation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

namespace qara {

namespace {

constexpr double kPi = std::numbers::pi;

void require_distinct(const EncodedWindow &w, const char *backend) {
    if (w.has_duplicate_words()) {
        throw DuplicateValues(
            std::string(backend) +
            " backend requires pairwise distinct data words: duplicate values "
            "interfere in the counter register. Enable unique mode or use the "
            "statevector backend.");
    }
}

double sq(double x) { return x * x; }

} // namespace

EncodedWindow::EncodedWindow(RegisterGeometry geometry, std::vector<std::uint64_t> values,
                             std::uint64_t reference)
    : geometry_(geometry), values_(std::move(values)), reference_(reference) {
    if (geometry_.window_size < 2 || !std::has_single_bit(geometry_.window_size)) {
        throw std::invalid_argument("window length must be a power of two >= 2, got " +
                                    std::to_string(geometry_.window_size));
    }
    if (std::size_t{1} << geometry_.index_qubits != geometry_.window_size) {
        throw std::invalid_argument("index qubit count does not match window length");
    }
    if (geometry_.bit_width < 1 || geometry_.bit_width > kMaxBitWidth) {
        throw std::invalid_argument("bit width must be in [1, 32], got " +
                                    std::to_string(geometry_.bit_width));
    }
    if (values_.size() != geometry_.window_size) {
        throw std::invalid_argument("value count does not match window length");
    }
    const std::uint64_t limit = std::uint64_t{1} << geometry_.bit_width;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j] >= limit) {
            throw std::out_of_range("value " + std::to_string(values_[j]) + " at index " +
                                    std::to_string(j) + " does not fit in " +
                                    std::to_string(geometry_.bit_width) + " bits");
        }
    }
    if (reference_ >= limit) {
        throw std::out_of_range("reference " + std::to_string(reference_) +
                                " does not fit in " + std::to_string(geometry_.bit_width) +
                                " bits");
    }
}

std::vector<std::uint64_t> EncodedWindow::data_words() const {
    std::vector<std::uint64_t> words(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) {
        words[j] = geometry_.unique_mode
                       ? (values_[j] << geometry_.index_qubits) | static_cast<std::uint64_t>(j)
                       : values_[j];
    }
    return words;
}

bool EncodedWindow::has_duplicate_words() const {
    const auto words = data_words();
    std::unordered_set<std::uint64_t> seen(words.begin(), words.end());
    return seen.size() != words.size();
}

EncodedWindow encode_window(std::span<const std::uint64_t> values, std::uint64_t reference,
                            int bit_width, bool unique_mode) {
    const std::size_t count = values.size();
    if (count < 2 || !std::has_single_bit(count)) {
        throw std::invalid_argument("window length must be a power of two >= 2, got " +
                                    std::to_string(count));
    }
    const RegisterGeometry geometry{count, std::countr_zero(count), bit_width, unique_mode};
    return EncodedWindow(geometry, std::vector<std::uint64_t>(values.begin(), values.end()),
                         reference);
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("distribution must not be empty");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= -1e-15 && p <= 1.0 + 1e-12)) {
            throw std::invalid_argument("probability outside [0, 1]: " + std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
    }
}

std::size_t Distribution::argmax() const {
    return static_cast<std::size_t>(
        std::distance(probs_.begin(), std::max_element(probs_.begin(), probs_.end())));
}

double max_abs_diff(const Distribution &a, const Distribution &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distribution size mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double bit_rotation_angle(int bit, int bit_width) {
    return kPi * std::ldexp(1.0, bit - bit_width);
}

BranchAngleTable branch_angles(const EncodedWindow &w) {
    const int n = w.geometry().bit_width;
    const auto r = static_cast<std::int64_t>(w.reference());
    const double scale = kPi / std::ldexp(1.0, n + 1);
    BranchAngleTable table;
    table.thetas.reserve(w.values().size());
    for (std::uint64_t d : w.values()) {
        const double closed = scale * static_cast<double>(r - static_cast<std::int64_t>(d));
        double bitwise = 0.0;
        for (int i = 0; i < n; ++i) {
            const int ri = static_cast<int>((w.reference() >> i) & 1U);
            const int di = static_cast<int>((d >> i) & 1U);
            bitwise += kPi * (ri - di) / std::ldexp(1.0, n - i + 1);
        }
        if (std::abs(closed - bitwise) > 1e-14) {
            throw std::logic_error("branch angle routes disagree");
        }
        table.thetas.push_back(closed);
    }
    return table;
}

Distribution analytic_distribution(const EncodedWindow &w) {
    require_distinct(w, "analytic");
    const auto thetas = branch_angles(w).thetas;
    const auto count = static_cast<double>(thetas.size());
    double sin_total = 0.0;
    for (double t : thetas) {
        sin_total += sq(std::sin(t));
    }
    std::vector<double> probs(thetas.size());
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const double others = sin_total - sq(std::sin(thetas[k]));
        probs[k] = (sq(std::cos(thetas[k])) + others / (count - 1.0)) / count;
    }
    return Distribution(std::move(probs));
}

Distribution simulate_statevector(const EncodedWindow &w, kernels::Exec exec) {
    const RegisterGeometry &g = w.geometry();
    const int m = g.index_qubits;
    const int total = g.total_qubits();
    if (total > kMaxStatevectorQubits) {
        throw RegisterTooLarge("statevector run needs " + std::to_string(total) +
                               " qubits (limit " + std::to_string(kMaxStatevectorQubits) +
                               "); use the branch backend for this window");
    }
    std::vector<double> amps(std::size_t{1} << total, 0.0);
    amps[0] = 1.0;
    auto apply = [&](const GateOp &gate) { kernels::apply_gate(amps, total, gate, exec); };

    for (int q = 0; q < m; ++q) {
        apply(GateOp::hadamard(q));
    }

    // Load each word into the data register under the index it belongs to.
    std::vector<Control> all_counter;
    for (int q = 0; q < m; ++q) {
        all_counter.push_back({q, Polarity::OnOne});
    }
    const auto words = w.data_words();
    for (std::size_t j = 0; j < words.size(); ++j) {
        for (int q = 0; q < m; ++q) {
            if (((j >> q) & 1U) == 0) {
                apply(GateOp::x(q));
            }
        }
        for (int b = 0; b < g.data_qubits(); ++b) {
            if ((words[j] >> b) & 1U) {
                apply(GateOp::x(m + b, all_counter));
            }
        }
        for (int q = 0; q < m; ++q) {
            if (((j >> q) & 1U) == 0) {
                apply(GateOp::x(q));
            }
        }
    }

    // The reference register holds a basis value, so its controls resolve
    // classically. Index bits appended in unique mode never control anything.
    const int value_offset = m + (g.unique_mode ? m : 0);
    for (int i = 0; i < g.bit_width; ++i) {
        const double angle = bit_rotation_angle(i, g.bit_width);
        if ((w.reference() >> i) & 1U) {
            kernels::apply_gates(amps, total, decompose_rotation(m, angle).widened(total),
                                 exec);
        }
        const GateList data_controlled = controlled(decompose_rotation(m, -angle),
                                                    {{value_offset + i, Polarity::OnOne}});
        kernels::apply_gates(amps, total, data_controlled.widened(total), exec);
    }

    auto probs = exec == kernels::Exec::Parallel ? kernels::marginal_low_parallel(amps, m)
                                                 : kernels::marginal_low_serial(amps, m);
    return Distribution(std::move(probs));
}

Distribution simulate_branches(const EncodedWindow &w, kernels::Exec exec) {
    require_distinct(w, "branch");
    const auto thetas = branch_angles(w).thetas;
    auto probs = exec == kernels::Exec::Parallel ? kernels::branch_marginal_parallel(thetas)
                                                 : kernels::branch_marginal_serial(thetas);
    return Distribution(std::move(probs));
}

std::size_t sample_once(const Distribution &dist, Rng &rng) {
    const double u = uniform01(rng);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        if (dist[k] > 0.0) {
            last_positive = k;
        }
        acc += dist[k];
        if (u < acc && dist[k] > 0.0) {
            return k;
        }
    }
    return last_positive;
}

std::vector<std::uint64_t> sample_index(const Distribution &dist, std::uint64_t shots,
                                        std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        acc += dist[k];
        cdf[k] = acc;
    }
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        if (dist[k] > 0.0) {
            last_positive = k;
        }
    }
    std::vector<std::uint64_t> counts(dist.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng);
        auto k = static_cast<std::size_t>(
            std::distance(cdf.begin(), std::upper_bound(cdf.begin(), cdf.end(), u)));
        // Skip zero-probability bins that share a cumulative value.
        while (k < dist.size() && dist[k] == 0.0) {
            ++k;
        }
        counts[std::min(k, last_positive)] += 1;
    }
    return counts;
}

Distribution distribution(const EncodedWindow &w, Backend backend) {
    switch (backend) {
    case Backend::Analytic:
        return analytic_distribution(w);
    case Backend::Branches:
        return simulate_branches(w);
    case Backend::Statevector:
        return simulate_statevector(w);
    }
    throw std::logic_error("unknown backend");
}

QaraResult run_qara(std::span<const std::uint64_t> values, std::uint64_t reference,
                    int bit_width, RunMode mode, bool unique_mode, Backend backend) {
    const EncodedWindow w = encode_window(values, reference, bit_width, unique_mode);
    if (w.has_duplicate_words()) {
        backend = Backend::Statevector;
    }
    const Distribution dist = distribution(w, backend);
    std::size_t index = 0;
    if (mode.kind == RunMode::Kind::Argmax) {
        index = dist.argmax();
    } else {
        Rng rng(mode.seed);
        index = sample_once(dist, rng);
    }
    return {index, values[index]};
}

double best_case_probability(std::size_t window_size, int bit_width) {
    if (window_size < 2 || bit_width < 1) {
        throw std::invalid_argument("best_case_probability needs M >= 2 and n >= 1");
    }
    const double angle = kPi / 2.0 - kPi / std::ldexp(1.0, bit_width + 1);
    return sq(std::cos(angle)) / static_cast<double>(window_size);
}

double outlier_bound(std::size_t window_size, int bit_width, int l, int p) {
    if (window_size < 2 || bit_width < 1 || l < 1 || p < 0) {
        throw std::invalid_argument("outlier_bound needs M >= 2, n >= 1, l >= 1, p >= 0");
    }
    const double lead = sq(std::cos(kPi / 4.0 - kPi / std::ldexp(1.0, l + 2)));
    const double spread = sq(std::sin(kPi / std::ldexp(1.0, l + p + 1)));
    return (lead + spread) / static_cast<double>(window_size);
}

} // namespace qara
