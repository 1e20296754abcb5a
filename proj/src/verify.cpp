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
#include "qara/verify.hpp"

#include "qara/engine.hpp"
#include "qara/random.hpp"
#include "qara/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qara {

namespace {

constexpr double kPi = std::numbers::pi;

double random_angle(Rng &rng) { return (2.0 * uniform01(rng) - 1.0) * 2.0 * kPi; }

std::uint64_t draw(Rng &rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

std::vector<std::uint64_t> distinct(Rng &rng, std::size_t count, int bits) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    while (out.size() < count) {
        const std::uint64_t v = uniform_below(rng, std::uint64_t{1} << bits);
        if (seen.insert(v).second) {
            out.push_back(v);
        }
    }
    return out;
}

CheckResult bounded(std::string name, double worst, double tol, std::string detail) {
    return {std::move(name), worst <= tol, worst, tol, std::move(detail)};
}

CheckResult unitarity(Rng &rng) {
    double worst = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < 20; ++k) {
            worst = std::max(worst, dense_rotation(n, random_angle(rng)).orthogonality_defect());
        }
    }
    return bounded("unitarity", worst, 1e-12, "n = 1..8, 20 angles");
}

CheckResult conjugation(Rng &rng) {
    double worst = 0;
    for (int n = 1; n <= 8; ++n) {
        const DenseOperator h = hadamard_n(n);
        for (int k = 0; k < 20; ++k) {
            const double phi = random_angle(rng);
            const DenseOperator r = dense_rotation(n, phi);
            worst = std::max(worst, max_abs_diff(mat_mul(mat_mul(h, r), h), r.transpose()));
        }
    }
    return bounded("hadamard conjugation", worst, 1e-11, "n = 1..8, 20 angles");
}

CheckResult fidelity(Rng &rng) {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k < 10; ++k) {
            const double phi = random_angle(rng);
            const GateList circuit = decompose_rotation(n, phi);
            worst = std::max(worst, max_abs_diff(evaluate_dense(circuit), dense_rotation(n, phi)));
        }
    }
    return bounded("decomposition fidelity", worst, 1e-10, "n = 1..6, 10 angles");
}

CheckResult composition(Rng &rng) {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k < 10; ++k) {
            const double a = random_angle(rng);
            const double b = random_angle(rng);
            worst = std::max(worst, max_abs_diff(mat_mul(dense_rotation(n, a), dense_rotation(n, b)),
                                                 dense_rotation(n, a + b)));
        }
    }
    return bounded("composition", worst, 1e-11, "n = 1..6, 10 pairs");
}

CheckResult agreement(Rng &rng) {
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = trial % 2 == 0 ? 4 : 8;
        const int n = (trial / 2) % 2 == 0 ? 4 : 6;
        const auto vals = distinct(rng, m, n);
        const std::uint64_t r = uniform_below(rng, std::uint64_t{1} << n);
        const EncodedWindow w = encode_window(vals, r, n, true);
        const Distribution a = analytic_distribution(w);
        worst = std::max(worst, max_abs_diff(a, simulate_branches(w)));
        worst = std::max(worst, max_abs_diff(a, simulate_statevector(w)));
    }
    return bounded("backend agreement", worst, 1e-10, "100 windows, M in {4, 8}, n in {4, 6}");
}

// Violations of "closer to the reference is strictly more likely".
std::size_t order_violations(const std::vector<std::uint64_t> &vals, std::uint64_t r, int n) {
    const Distribution d = analytic_distribution(encode_window(vals, r, n, true));
    std::size_t bad = 0;
    auto gap = [&](std::size_t i) {
        return vals[i] > r ? vals[i] - r : r - vals[i];
    };
    for (std::size_t a = 0; a < vals.size(); ++a) {
        for (std::size_t b = 0; b < vals.size(); ++b) {
            if (gap(a) < gap(b) && !(d[a] > d[b])) {
                ++bad;
            }
        }
    }
    return bad;
}

CheckResult ordering(Rng &rng) {
    std::size_t bad = order_violations({5, 0, 15, 10}, 0, 4);
    bad += order_violations({8, 3, 29, 63, 14, 2, 45, 10}, 0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(draw(rng, 4, 8));
        const auto vals = distinct(rng, 8, n);
        bad += order_violations(vals, uniform_below(rng, std::uint64_t{1} << n), n);
    }
    return bounded("monotone ordering", static_cast<double>(bad), 0.0,
                   "two fixed windows and 100 random windows");
}

CheckResult best_case() {
    double worst = 0;
    for (std::size_t m : {4u, 8u, 16u}) {
        for (int n : {2, 4, 8}) {
            std::vector<std::uint64_t> vals(m, 0);
            vals[m - 1] = (std::uint64_t{1} << n) - 1;
            const Distribution d = analytic_distribution(encode_window(vals, 0, n, true));
            worst = std::max(worst, std::abs(d[m - 1] - best_case_probability(m, n)));
        }
    }
    return bounded("best-case equality", worst, 1e-12, "M in {4, 8, 16}, n in {2, 4, 8}");
}

CheckResult outlier_sweep(Rng &rng) {
    std::size_t violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(draw(rng, 2, 8));
        const int l = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(n)));
        const int p = static_cast<int>(draw(rng, 0, 3));
        const std::size_t m = std::size_t{1} << draw(rng, 1, 4);
        const std::uint64_t top = std::uint64_t{1} << n;
        const std::uint64_t outlier = draw(rng, top / 2, top - 1);
        const std::uint64_t r = draw(rng, 0, outlier >> l);
        const std::uint64_t sigma = r >> p;
        const std::size_t k = uniform_below(rng, m);
        std::vector<std::uint64_t> vals(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == k) {
                vals[j] = outlier;
                continue;
            }
            const auto lo = r > sigma ? r - sigma : 0;
            vals[j] = std::min(draw(rng, lo, r + sigma), top - 1);
        }
        const Distribution d = analytic_distribution(encode_window(vals, r, n, true));
        if (d[k] > outlier_bound(m, n, l, p) + 1e-15) {
            ++violations;
        }
    }
    return bounded("outlier bound sweep", static_cast<double>(violations), 0.0,
                   "200 instances with the outlier's top bit set");
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &opts) {
    Rng rng(derive_seed(opts.seed, {0x7e11f7}));
    std::vector<CheckResult> out;
    out.push_back(unitarity(rng));
    out.push_back(conjugation(rng));
    out.push_back(fidelity(rng));
    out.push_back(composition(rng));
    out.push_back(agreement(rng));
    out.push_back(ordering(rng));
    out.push_back(best_case());
    out.push_back(outlier_sweep(rng));
    return out;
}

} // namespace qara
