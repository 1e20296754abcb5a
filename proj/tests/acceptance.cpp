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
//
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "image_suite.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

#include "qara/engine.hpp"
#include "qara/filter.hpp"
#include "qara/io.hpp"
#include "qara/rotation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace qara;
using Values = std::vector<std::uint64_t>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

Outcome unitarity() {
    const auto t0 = Clock::now();
    double worst = 0;
    for (int n = 1; n <= 8; ++n) {
        const DenseOperator id = DenseOperator::identity(n);
        for (double phi : testing::random_angles(20, 100 + n)) {
            const DenseOperator r = dense_rotation(n, phi);
            worst = std::max(worst, max_abs_diff(mat_mul(r, r.transpose()), id));
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-12 && secs < 10.0,
            fmt("max |R R^T - I| = %.3g (tol 1e-12), %.2f s (limit 10 s)", worst, secs)};
}

Outcome hadamard_conjugation() {
    double worst = 0;
    for (int n = 1; n <= 8; ++n) {
        const DenseOperator h = hadamard_n(n);
        for (double phi : testing::random_angles(20, 200 + n)) {
            const DenseOperator r = dense_rotation(n, phi);
            worst = std::max(worst, max_abs_diff(mat_mul(mat_mul(h, r), h), r.transpose()));
        }
    }
    return {worst <= 1e-11, fmt("max |H R H - R^T| = %.3g (tol 1e-11)", worst)};
}

Outcome decomposition_fidelity() {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
        for (double phi : testing::random_angles(10, 300 + n)) {
            const GateList circuit = decompose_rotation(n, phi);
            worst = std::max(worst, max_abs_diff(evaluate_dense(circuit), dense_rotation(n, phi)));
        }
    }
    return {worst <= 1e-10, fmt("max |circuit - R| = %.3g (tol 1e-10), n = 1..6", worst)};
}

Outcome gate_scaling() {
    constexpr double kCountLo = 1.0, kCountHi = 2.0;
    constexpr double kDepthLo = 2.0, kDepthHi = 4.0;
    double cmin = 1e9, cmax = 0, dmin = 1e9, dmax = 0;
    for (int n = 2; n <= 10; ++n) {
        const GateMetrics g = gate_metrics(n);
        const double c = static_cast<double>(g.gate_count) / (n * n);
        const double d = static_cast<double>(g.parallel_depth) / n;
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    const bool ok = cmin >= kCountLo && cmax <= kCountHi && dmin >= kDepthLo && dmax <= kDepthHi;
    return {ok, fmt("gates/n^2 in [%.3f, %.3f] within [1, 2]; parallel depth/n in [%.3f, %.3f] "
                    "within [2, 4]",
                    cmin, cmax, dmin, dmax)};
}

Outcome composition() {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto a = testing::random_angles(10, 400 + n);
        const auto b = testing::random_angles(10, 500 + n);
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst,
                             max_abs_diff(mat_mul(dense_rotation(n, a[i]), dense_rotation(n, b[i])),
                                          dense_rotation(n, a[i] + b[i])));
        }
    }
    return {worst <= 1e-11, fmt("max |R(a)R(b) - R(a+b)| = %.3g (tol 1e-11)", worst)};
}

Outcome backend_agreement() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(600);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = trial % 2 == 0 ? 4 : 8;
        const int n = (trial / 2) % 2 == 0 ? 4 : 6;
        const auto vals = oracle::distinct_values(m, n, rng);
        const std::uint64_t r = rng() % (std::uint64_t{1} << n);
        const EncodedWindow w = encode_window(vals, r, n, true);
        const Distribution a = analytic_distribution(w);
        worst = std::max(worst, max_abs_diff(a, simulate_branches(w)));
        worst = std::max(worst, max_abs_diff(a, simulate_statevector(w)));
        worst = std::max(worst, max_diff(a.probs(), oracle::joint_table_marginal(vals, r, n, true)));
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-10 && secs < 60.0,
            fmt("max backend gap = %.3g (tol 1e-10) over 100 windows, %.2f s (limit 60 s)", worst,
                secs)};
}

std::size_t order_violations(const Values &vals, std::uint64_t r, int n) {
    const Distribution d = analytic_distribution(encode_window(vals, r, n, true));
    auto gap = [&](std::size_t i) { return vals[i] > r ? vals[i] - r : r - vals[i]; };
    std::size_t bad = 0;
    for (std::size_t a = 0; a < vals.size(); ++a) {
        for (std::size_t b = 0; b < vals.size(); ++b) {
            if (gap(a) < gap(b) && !(d[a] > d[b])) {
                ++bad;
            }
        }
    }
    return bad;
}

Outcome monotone_ordering() {
    const std::size_t four = order_violations({5, 0, 15, 10}, 0, 4);
    const std::size_t eight = order_violations({8, 3, 29, 63, 14, 2, 45, 10}, 0, 6);
    std::mt19937_64 rng(700);
    std::size_t random = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 6;
        const std::size_t m = std::size_t{1} << (1 + trial % 3);
        const auto vals = oracle::distinct_values(m, n, rng);
        random += order_violations(vals, rng() % (std::uint64_t{1} << n), n);
    }
    return {four + eight + random == 0,
            fmt("order violations: 4-window %zu, 8-window %zu, 100 random %zu", four, eight,
                random)};
}

Outcome best_case() {
    double worst = 0;
    for (std::size_t m : {4u, 8u, 16u}) {
        for (int n : {2, 4, 8}) {
            const double expect =
                std::pow(std::cos(kPi / 2 - kPi / std::ldexp(1.0, n + 1)), 2) / static_cast<double>(m);
            for (std::size_t k = 0; k < m; ++k) {
                Values vals(m, 0);
                vals[k] = (std::uint64_t{1} << n) - 1;
                const Distribution d = analytic_distribution(encode_window(vals, 0, n, true));
                worst = std::max(worst, std::abs(d[k] - expect));
                const Distribution s = simulate_statevector(encode_window(vals, 0, n, true));
                worst = std::max(worst, std::abs(s[k] - expect));
            }
        }
    }
    return {worst <= 1e-12, fmt("max |P_k - cos^2(pi/2 - pi/2^(n+1))/M| = %.3g (tol 1e-12)", worst)};
}

Outcome outlier_sweep() {
    std::mt19937_64 rng(800);
    int violations = 0;
    double tightest = 1e9;
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = oracle::outlier_instance(rng);
        const double m = static_cast<double>(inst.values.size());
        const double bound =
            (std::pow(std::cos(kPi / 4 - kPi / std::ldexp(1.0, inst.l + 2)), 2) +
             std::pow(std::sin(kPi / std::ldexp(1.0, inst.l + inst.p + 1)), 2)) /
            m;
        const auto p = oracle::closed_form(inst.values, inst.reference, inst.bit_width);
        const double got = p[inst.outlier_index];
        tightest = std::min(tightest, bound - got);
        if (got > bound + 1e-15) {
            ++violations;
        }
    }
    return {violations == 0,
            fmt("%d violations in 200 instances (outlier top bit set); min slack %.3g", violations,
                tightest)};
}

Outcome sampling() {
    const auto t0 = Clock::now();
    const Values four = {5, 0, 15, 10};
    const Distribution d = analytic_distribution(encode_window(four, 0, 4, true));
    constexpr std::uint64_t kShots = 1000000;
    const auto counts = sample_index(d, kShots, 1);
    double worst_z = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        const double sigma = std::sqrt(kShots * d[k] * (1 - d[k]));
        worst_z = std::max(worst_z, std::abs(static_cast<double>(counts[k]) - kShots * d[k]) / sigma);
    }
    const double secs = seconds_since(t0);
    return {worst_z <= 4.0 && secs < 5.0,
            fmt("max |z| = %.2f (limit 4) over 10^6 shots, %.2f s (limit 5 s)", worst_z, secs)};
}

Outcome signal_filter() {
    const SignalBuffer clean = io::generate_signal(io::SignalKind::Triangular, 256, 200);
    ArtifactSpec spec;
    spec.count = 2;
    spec.magnitude = 255;
    spec.seed = 11;
    const auto noisy = inject_artifacts(clean, spec);
    FilterConfig cfg;
    const FilterResult q = quantum_feedback_filter(noisy.data, cfg);
    const FilterResult m = median_filter(noisy.data, cfg.window);
    const auto rq = compute_quality(clean, SignalBuffer{q.output, clean.bit_width});
    const auto rm = compute_quality(clean, SignalBuffer{m.output, clean.bit_width});
    std::size_t nonmembers = 0;
    for (const WindowTrace &w : q.trace) {
        const auto src = gather_window(noisy.data.samples, w.position, cfg.window);
        if (std::find(src.begin(), src.end(), w.chosen_value) == src.end()) {
            ++nonmembers;
        }
    }
    const bool impulses_gone = std::count(q.output.begin(), q.output.end(), 255) == 0;
    const bool ok = rq.residual_outlier_count == 0 && rm.residual_outlier_count == 0 &&
                    nonmembers == 0 && impulses_gone;
    return {ok, fmt("residual outliers: qara %llu, median %llu; non-member outputs %zu",
                    static_cast<unsigned long long>(rq.residual_outlier_count),
                    static_cast<unsigned long long>(rm.residual_outlier_count), nonmembers)};
}

double image_psnr(const testing::SuiteCase &c, std::size_t window, RunMode mode) {
    FilterConfig cfg;
    cfg.window = window;
    cfg.mode = mode;
    return compute_quality(c.clean, filter_image(c.noisy.data, cfg, Algorithm::Qara).image).psnr;
}

Outcome window_effect() {
    bool ok = true;
    std::string detail;
    for (std::size_t block : {6u, 12u}) {
        std::vector<double> a8, a16, s8, s16;
        for (const auto &c : testing::image_suite(block)) {
            a8.push_back(image_psnr(c, 8, RunMode::argmax()));
            a16.push_back(image_psnr(c, 16, RunMode::argmax()));
            s8.push_back(image_psnr(c, 8, RunMode::sampled(c.seed)));
            s16.push_back(image_psnr(c, 16, RunMode::sampled(c.seed)));
        }
        const double ma8 = median_of(a8), ma16 = median_of(a16);
        const double ms8 = median_of(s8), ms16 = median_of(s16);
        ok = ok && ma16 >= ma8 && ms16 >= ms8 - 0.5;
        detail += fmt("%zux%zu block: argmax %.2f -> %.2f dB, sampled %.2f -> %.2f dB; ", block,
                      block, ma8, ma16, ms8, ms16);
    }
    detail += "median PSNR over 5 seeds, window 8 -> 16";
    return {ok, detail};
}

Outcome relative_quality() {
    double worst_ratio = 0;
    double worst_sampled = 0;
    for (std::size_t block : {6u, 12u}) {
        for (const auto &c : testing::image_suite(block)) {
            for (std::size_t window : {8u, 16u}) {
                FilterConfig cfg;
                cfg.window = window;
                const double med =
                    compute_quality(c.clean, filter_image(c.noisy.data, cfg, Algorithm::Median).image)
                        .mse;
                const double q =
                    compute_quality(c.clean, filter_image(c.noisy.data, cfg, Algorithm::Qara).image)
                        .mse;
                cfg.mode = RunMode::sampled(c.seed);
                const double qs =
                    compute_quality(c.clean, filter_image(c.noisy.data, cfg, Algorithm::Qara).image)
                        .mse;
                worst_ratio = std::max(worst_ratio, q / med);
                worst_sampled = std::max(worst_sampled, qs / med);
            }
        }
    }

    // Per-window cost: rotations must not depend on M, comparisons ~ M log M.
    std::mt19937_64 rng(1300);
    Values row(512);
    for (auto &v : row) {
        v = rng() % 256;
    }
    bool rotations_flat = true;
    double band_lo = 1e9, band_hi = 0;
    std::uint64_t last = 0;
    bool comparisons_grow = true;
    for (std::size_t m : {2u, 4u, 8u, 16u, 32u, 64u, 128u}) {
        FilterConfig cfg;
        cfg.window = m;
        const auto q = quantum_feedback_filter(row, cfg);
        rotations_flat = rotations_flat && q.counters.rotations == q.counters.windows * 16;
        const auto md = median_filter(row, m);
        const double per = static_cast<double>(md.counters.comparisons) / md.counters.windows;
        const double ratio = per / (m * std::log2(static_cast<double>(m)));
        band_lo = std::min(band_lo, ratio);
        band_hi = std::max(band_hi, ratio);
        comparisons_grow = comparisons_grow && md.counters.comparisons > last;
        last = md.counters.comparisons;
    }
    const bool counters_ok = rotations_flat && comparisons_grow && band_lo >= 0.25 && band_hi <= 4.0;
    return {worst_ratio <= 4.0 && counters_ok,
            fmt("argmax max MSE ratio qara/median = %.3f (limit 4); rotations/window = 2n for all M: "
                "%s; comparisons/(M log2 M) in [%.2f, %.2f]; sampled-mode ratio (informational) "
                "%.2f",
                worst_ratio, rotations_flat ? "yes" : "no", band_lo, band_hi, worst_sampled)};
}

Outcome interference() {
    const Values dup = {3, 3, 0, 5};
    const std::uint64_t r = 0;
    const int n = 3;
    const auto eq2 = oracle::closed_form(dup, r, n);
    const Distribution plain = simulate_statevector(encode_window(dup, r, n, false));
    const Distribution unique = simulate_statevector(encode_window(dup, r, n, true));
    const double plain_gap = max_diff(plain.probs(), eq2);
    const double unique_gap = max_diff(unique.probs(), eq2);
    const double oracle_gap = max_diff(plain.probs(), oracle::joint_table_marginal(dup, r, n, false));
    const bool ok = plain_gap > 1e-6 && unique_gap <= 1e-10 && oracle_gap <= 1e-10;
    return {ok, fmt("[3,3,0,5], r=0, n=3: non-unique gap %.3g (> 1e-6), unique gap %.3g "
                    "(<= 1e-10), joint-table gap %.3g",
                    plain_gap, unique_gap, oracle_gap)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"unitarity", unitarity},
        {"hadamard conjugation", hadamard_conjugation},
        {"decomposition fidelity", decomposition_fidelity},
        {"gate-count scaling", gate_scaling},
        {"composition", composition},
        {"backend agreement", backend_agreement},
        {"monotone ordering", monotone_ordering},
        {"best-case equality", best_case},
        {"outlier bound sweep", outlier_sweep},
        {"sampling statistics", sampling},
        {"signal filter behavior", signal_filter},
        {"window-size effect", window_effect},
        {"relative quality and cost", relative_quality},
        {"interference demonstration", interference},
    };
    int failures = 0;
    int id = 1;
    for (const auto &[name, check] : criteria) {
        Outcome o{false, ""};
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %2d %-28s %s\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.passed ? 0 : 1;
        ++id;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
