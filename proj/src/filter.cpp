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
#include "qara/filter.hpp"

#include "qara/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace qara {

namespace {

void check_length(std::size_t length, std::size_t window) {
    if (length < window) {
        throw std::invalid_argument("signal of length " + std::to_string(length) +
                                    " is shorter than the window (" +
                                    std::to_string(window) + ")");
    }
}

std::uint64_t window_mean(std::span<const std::uint64_t> values) {
    const std::uint64_t sum = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
    return sum / values.size();
}

std::uint64_t lower_median(std::vector<std::uint64_t> &values, std::uint64_t &comparisons) {
    std::sort(values.begin(), values.end(), [&](std::uint64_t a, std::uint64_t b) {
        ++comparisons;
        return a < b;
    });
    return values[(values.size() - 1) / 2];
}

// Emits `value` for positions [t, t + stride) clipped to the output.
void hold(std::vector<std::uint64_t> &out, std::size_t t, std::size_t stride,
          std::uint64_t value) {
    const std::size_t end = std::min(out.size(), t + stride);
    for (std::size_t i = t; i < end; ++i) {
        out[i] = value;
    }
}

} // namespace

void SignalBuffer::validate() const {
    if (bit_width < 1 || bit_width > kMaxBitWidth) {
        throw std::invalid_argument("signal bit width must be in [1, 32]");
    }
    const std::uint64_t limit = std::uint64_t{1} << bit_width;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] >= limit) {
            throw std::out_of_range("sample " + std::to_string(samples[i]) + " at position " +
                                    std::to_string(i) + " exceeds " +
                                    std::to_string(bit_width) + " bits");
        }
    }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width(width), height(height), pixels(std::move(pixels)) {
    if (this->pixels.size() != width * height) {
        throw std::invalid_argument("pixel count does not match width x height");
    }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width(width), height(height), pixels(width * height, fill) {}

void FilterConfig::validate() const {
    if (window < 2 || window > kMaxFilterWindow || !std::has_single_bit(window)) {
        throw std::invalid_argument("window must be a power of two in [2, 1024], got " +
                                    std::to_string(window));
    }
    if (stride < 1) {
        throw std::invalid_argument("stride must be >= 1");
    }
    if (bit_width < 1 || bit_width > kMaxBitWidth) {
        throw std::invalid_argument("bit width must be in [1, 32]");
    }
}

NormalizedWindow normalize_window(std::span<const std::uint64_t> values,
                                  std::uint64_t reference, int bit_width) {
    if (bit_width < 1 || bit_width > kMaxBitWidth) {
        throw std::invalid_argument("bit width must be in [1, 32]");
    }
    if (values.empty()) {
        throw std::invalid_argument("cannot normalize an empty window");
    }
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    NormalizedWindow out{{}, 0, *lo_it, *hi_it, *lo_it == *hi_it,
                         std::vector<std::uint64_t>(values.begin(), values.end())};
    out.values.assign(values.size(), 0);
    if (out.degenerate) {
        return out;
    }
    const double top = std::ldexp(1.0, bit_width) - 1.0;
    const double scale = top / static_cast<double>(out.hi - out.lo);
    auto map = [&](std::uint64_t v) {
        const double x = (static_cast<double>(v) - static_cast<double>(out.lo)) * scale;
        return std::clamp(std::round(x), 0.0, top);
    };
    for (std::size_t j = 0; j < values.size(); ++j) {
        out.values[j] = static_cast<std::uint64_t>(map(values[j]));
    }
    out.reference = static_cast<std::uint64_t>(map(reference));
    return out;
}

std::vector<std::uint64_t> gather_window(std::span<const std::uint64_t> samples, std::size_t t,
                                         std::size_t window) {
    if (samples.empty()) {
        throw std::invalid_argument("cannot window an empty signal");
    }
    std::vector<std::uint64_t> out(window);
    const auto last = static_cast<std::int64_t>(samples.size()) - 1;
    const auto start = static_cast<std::int64_t>(t) - static_cast<std::int64_t>(window / 2);
    for (std::size_t j = 0; j < window; ++j) {
        const auto idx = std::clamp<std::int64_t>(start + static_cast<std::int64_t>(j), 0, last);
        out[j] = samples[static_cast<std::size_t>(idx)];
    }
    return out;
}

FilterResult quantum_feedback_filter(std::span<const std::uint64_t> samples,
                                     const FilterConfig &cfg, std::uint64_t row) {
    cfg.validate();
    check_length(samples.size(), cfg.window);
    const std::uint64_t limit = std::uint64_t{1} << cfg.bit_width;

    FilterResult result;
    result.output.assign(samples.size(), 0);
    std::uint64_t previous = 0;
    std::size_t ordinal = 0;
    for (std::size_t t = 0; t < samples.size(); t += cfg.stride, ++ordinal) {
        const auto window = gather_window(samples, t, cfg.window);
        const bool use_mean = ordinal == 0 || cfg.reference == ReferencePolicy::WindowMean;
        const std::uint64_t reference = use_mean ? window_mean(window) : previous;

        RunMode mode = cfg.mode;
        if (mode.kind == RunMode::Kind::Sampled) {
            mode.seed = derive_seed(cfg.mode.seed, {row, ordinal});
        }
        QaraResult picked{};
        if (cfg.normalize) {
            const auto nw = normalize_window(window, reference, cfg.bit_width);
            picked = run_qara(nw.values, nw.reference, cfg.bit_width, mode, cfg.unique_mode);
            picked.value = nw.original(picked.index);
        } else {
            if (reference >= limit || std::any_of(window.begin(), window.end(),
                                                  [&](std::uint64_t v) { return v >= limit; })) {
                throw std::out_of_range("window value exceeds the configured bit width; "
                                        "enable normalization or widen the register");
            }
            picked = run_qara(window, reference, cfg.bit_width, mode, cfg.unique_mode);
        }

        hold(result.output, t, cfg.stride, picked.value);
        result.trace.push_back({ordinal, t, reference, picked.index, picked.value});
        result.counters.windows += 1;
        result.counters.rotations += rotations_per_window(cfg.bit_width);
        previous = picked.value;
    }
    return result;
}

FilterResult quantum_feedback_filter(const SignalBuffer &signal, const FilterConfig &cfg) {
    signal.validate();
    return quantum_feedback_filter(signal.samples, cfg, 0);
}

FilterResult median_filter(std::span<const std::uint64_t> samples, std::size_t window,
                           std::size_t stride, EdgePolicy /*edge*/) {
    if (window < 1 || window > kMaxFilterWindow) {
        throw std::invalid_argument("median window must be in [1, 1024]");
    }
    if (stride < 1) {
        throw std::invalid_argument("stride must be >= 1");
    }
    check_length(samples.size(), window);
    FilterResult result;
    result.output.assign(samples.size(), 0);
    std::size_t ordinal = 0;
    for (std::size_t t = 0; t < samples.size(); t += stride, ++ordinal) {
        auto values = gather_window(samples, t, window);
        const std::uint64_t med = lower_median(values, result.counters.comparisons);
        hold(result.output, t, stride, med);
        result.trace.push_back({ordinal, t, 0, 0, med});
        result.counters.windows += 1;
    }
    return result;
}

FilterResult median_filter(const SignalBuffer &signal, std::size_t window, std::size_t stride,
                           EdgePolicy edge) {
    signal.validate();
    return median_filter(signal.samples, window, stride, edge);
}

std::vector<std::uint64_t> image_row(const GrayImage &img, std::size_t y) {
    const auto *begin = img.pixels.data() + y * img.width;
    return {begin, begin + img.width};
}

ImageFilterResult filter_image(const GrayImage &img, const FilterConfig &cfg,
                               Algorithm algorithm, kernels::Exec exec) {
    cfg.validate();
    if (img.width < cfg.window) {
        throw std::invalid_argument("image width " + std::to_string(img.width) +
                                    " is narrower than the window (" +
                                    std::to_string(cfg.window) + ")");
    }
    ImageFilterResult out{GrayImage(img.width, img.height, std::uint8_t{0}), {}};
    std::vector<CostCounters> row_counters(img.height);

    auto filter_row = [&](std::size_t y) {
        const auto row = image_row(img, y);
        const FilterResult r = algorithm == Algorithm::Qara
                                   ? quantum_feedback_filter(row, cfg, y)
                                   : median_filter(row, cfg.window, cfg.stride, cfg.edge);
        for (std::size_t x = 0; x < img.width; ++x) {
            out.image.at(x, y) = static_cast<std::uint8_t>(r.output[x]);
        }
        row_counters[y] = r.counters;
    };

    const auto rows = static_cast<std::int64_t>(img.height);
    if (exec == kernels::Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t y = 0; y < rows; ++y) {
            filter_row(static_cast<std::size_t>(y));
        }
    } else {
        for (std::int64_t y = 0; y < rows; ++y) {
            filter_row(static_cast<std::size_t>(y));
        }
    }
    for (const CostCounters &c : row_counters) {
        out.counters += c;
    }
    return out;
}

QualityReport compute_quality(std::span<const std::uint64_t> clean,
                              std::span<const std::uint64_t> filtered, std::uint64_t threshold) {
    return compute_quality_with_peak(clean, filtered, threshold, 255.0);
}

QualityReport compute_quality_with_peak(std::span<const std::uint64_t> clean,
                                        std::span<const std::uint64_t> filtered,
                                        std::uint64_t threshold, double peak) {
    if (clean.size() != filtered.size()) {
        throw std::invalid_argument("quality: shape mismatch (" + std::to_string(clean.size()) +
                                    " vs " + std::to_string(filtered.size()) + " samples)");
    }
    if (clean.empty()) {
        throw std::invalid_argument("quality: empty input");
    }
    QualityReport q;
    q.threshold = threshold;
    double sum = 0.0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        const std::uint64_t diff =
            clean[i] > filtered[i] ? clean[i] - filtered[i] : filtered[i] - clean[i];
        sum += static_cast<double>(diff) * static_cast<double>(diff);
        q.max_abs_error = std::max(q.max_abs_error, diff);
        if (diff > threshold) {
            ++q.residual_outlier_count;
        }
    }
    q.mse = sum / static_cast<double>(clean.size());
    q.psnr = q.mse == 0.0 ? std::numeric_limits<double>::infinity()
                          : 10.0 * std::log10(peak * peak / q.mse);
    return q;
}

QualityReport compute_quality(const GrayImage &clean, const GrayImage &filtered,
                              std::uint64_t threshold) {
    if (clean.width != filtered.width || clean.height != filtered.height) {
        throw std::invalid_argument("quality: image dimensions differ");
    }
    const std::vector<std::uint64_t> a(clean.pixels.begin(), clean.pixels.end());
    const std::vector<std::uint64_t> b(filtered.pixels.begin(), filtered.pixels.end());
    return compute_quality_with_peak(a, b, threshold, 255.0);
}

QualityReport compute_quality(const SignalBuffer &clean, const SignalBuffer &filtered,
                              std::uint64_t threshold) {
    const double peak = std::ldexp(1.0, std::max(clean.bit_width, filtered.bit_width)) - 1.0;
    return compute_quality_with_peak(clean.samples, filtered.samples, threshold, peak);
}

Corrupted<SignalBuffer> inject_artifacts(const SignalBuffer &clean, const ArtifactSpec &spec) {
    clean.validate();
    if (spec.magnitude >= (std::uint64_t{1} << clean.bit_width)) {
        throw std::invalid_argument("artifact magnitude does not fit the signal bit width");
    }
    Corrupted<SignalBuffer> out{clean, {}};
    const std::size_t len = clean.samples.size();
    const std::size_t run = spec.shape == ArtifactShape::Block ? spec.block_width : 1;
    if (spec.count == 0) {
        return out;
    }
    if (run == 0 || run > len || spec.count * run > len) {
        throw std::invalid_argument("artifacts do not fit in the signal");
    }
    Rng rng(derive_seed(spec.seed, {0x5167a1}));
    std::set<std::size_t> mask;
    std::size_t placed = 0;
    for (int attempt = 0; placed < spec.count && attempt < 10000; ++attempt) {
        const std::size_t start = uniform_below(rng, len - run + 1);
        bool overlaps = false;
        for (std::size_t i = start; i < start + run; ++i) {
            overlaps = overlaps || mask.count(i) != 0;
        }
        if (overlaps) {
            continue;
        }
        for (std::size_t i = start; i < start + run; ++i) {
            mask.insert(i);
            out.data.samples[i] = spec.magnitude;
        }
        ++placed;
    }
    if (placed < spec.count) {
        throw std::runtime_error("could not place non-overlapping artifacts");
    }
    out.mask.assign(mask.begin(), mask.end());
    return out;
}

Corrupted<GrayImage> inject_artifacts(const GrayImage &clean, const ArtifactSpec &spec) {
    if (spec.magnitude > 255) {
        throw std::invalid_argument("artifact magnitude does not fit 8 bits");
    }
    Corrupted<GrayImage> out{clean, {}};
    if (spec.count == 0) {
        return out;
    }
    const bool block = spec.shape == ArtifactShape::Block;
    const std::size_t bw = block ? spec.block_width : 1;
    const std::size_t bh = block ? spec.block_height : 1;
    if (bw == 0 || bh == 0 || bw > clean.width || bh > clean.height) {
        throw std::invalid_argument("artifact block does not fit in the image");
    }
    Rng rng(derive_seed(spec.seed, {0x1ea9e}));
    std::set<std::size_t> mask;
    std::size_t placed = 0;
    for (int attempt = 0; placed < spec.count && attempt < 10000; ++attempt) {
        const std::size_t x0 = uniform_below(rng, clean.width - bw + 1);
        const std::size_t y0 = uniform_below(rng, clean.height - bh + 1);
        bool overlaps = false;
        for (std::size_t y = y0; y < y0 + bh && !overlaps; ++y) {
            for (std::size_t x = x0; x < x0 + bw; ++x) {
                overlaps = overlaps || mask.count(y * clean.width + x) != 0;
            }
        }
        if (overlaps) {
            continue;
        }
        for (std::size_t y = y0; y < y0 + bh; ++y) {
            for (std::size_t x = x0; x < x0 + bw; ++x) {
                mask.insert(y * clean.width + x);
                out.data.at(x, y) = static_cast<std::uint8_t>(spec.magnitude);
            }
        }
        ++placed;
    }
    if (placed < spec.count) {
        throw std::runtime_error("could not place non-overlapping artifacts");
    }
    out.mask.assign(mask.begin(), mask.end());
    return out;
}

} // namespace qara
