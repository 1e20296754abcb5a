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
 * @file filter.hpp
 * Sliding-window filtering with amplitude redistribution, and the median
 * filter it is compared against.
 *
 * Window geometry is shared by both filters: the window for output position
 * t covers [t − ⌊M/2⌋, t + ⌈M/2⌉ − 1] with edge samples replicated. With
 * stride s > 1 a window is evaluated every s positions and its output is
 * held for the next s samples, so the output length always equals the input
 * length.
 */
#pragma once

#include "qara/engine.hpp"
#include "qara/kernels.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace qara {

inline constexpr std::size_t kMaxFilterWindow = 1024;

struct SignalBuffer {
    std::vector<std::uint64_t> samples;
    int bit_width = 8;

    /// Throws if a sample does not fit in `bit_width` bits.
    void validate() const;
};

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels; ///< row-major

    GrayImage() = default;
    GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
    GrayImage(std::size_t width, std::size_t height, std::uint8_t fill);

    [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y) const {
        return pixels[y * width + x];
    }
    std::uint8_t &at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }

    friend bool operator==(const GrayImage &, const GrayImage &) = default;
};

enum class EdgePolicy { Replicate };

/// Reference for each window: the previous window's output (the first window
/// falls back to its integer mean), or always the window's own integer mean.
enum class ReferencePolicy { Feedback, WindowMean };

struct FilterConfig {
    std::size_t window = 8; ///< M, a power of two in [2, 1024]
    int bit_width = 8;      ///< n
    RunMode mode = RunMode::argmax();
    bool normalize = true;
    std::size_t stride = 1;
    EdgePolicy edge = EdgePolicy::Replicate;
    ReferencePolicy reference = ReferencePolicy::Feedback;
    bool unique_mode = true;

    /// Throws std::invalid_argument on a bad geometry.
    void validate() const;
};

/// Operation counters for the complexity comparison.
struct CostCounters {
    std::uint64_t windows = 0;
    /// Controlled rotation operators issued by the redistribution circuit.
    std::uint64_t rotations = 0;
    /// Element comparisons made while sorting median windows.
    std::uint64_t comparisons = 0;

    CostCounters &operator+=(const CostCounters &o) {
        windows += o.windows;
        rotations += o.rotations;
        comparisons += o.comparisons;
        return *this;
    }
};

struct WindowTrace {
    std::size_t ordinal;
    std::size_t position;
    std::uint64_t reference;
    std::size_t chosen_index;
    std::uint64_t chosen_value;
};

struct FilterResult {
    std::vector<std::uint64_t> output;
    std::vector<WindowTrace> trace;
    CostCounters counters;
};

struct NormalizedWindow {
    std::vector<std::uint64_t> values;
    std::uint64_t reference;
    std::uint64_t lo;
    std::uint64_t hi;
    bool degenerate; ///< hi == lo: everything maps to 0
    std::vector<std::uint64_t> originals;

    /// Original element behind a chosen index.
    [[nodiscard]] std::uint64_t original(std::size_t index) const { return originals.at(index); }
};

/// Affine stretch v ↦ round((v − lo)(2^n − 1)/(hi − lo)) over the window's
/// own range; the reference goes through the same map and is clamped.
[[nodiscard]] NormalizedWindow normalize_window(std::span<const std::uint64_t> values,
                                                std::uint64_t reference, int bit_width);

/// Samples of the window for output position `t` with replicated edges.
[[nodiscard]] std::vector<std::uint64_t> gather_window(std::span<const std::uint64_t> samples,
                                                       std::size_t t, std::size_t window);

/// Rotation operators one window costs: two per data bit, independent of M.
[[nodiscard]] constexpr std::uint64_t rotations_per_window(int bit_width) {
    return 2 * static_cast<std::uint64_t>(bit_width);
}

/// Filters one row. `row` selects the random stream in sampled mode.
[[nodiscard]] FilterResult quantum_feedback_filter(std::span<const std::uint64_t> samples,
                                                   const FilterConfig &cfg,
                                                   std::uint64_t row = 0);
[[nodiscard]] FilterResult quantum_feedback_filter(const SignalBuffer &signal,
                                                   const FilterConfig &cfg);

/// Sliding median; even windows take the lower of the two central elements.
[[nodiscard]] FilterResult median_filter(std::span<const std::uint64_t> samples,
                                         std::size_t window, std::size_t stride = 1,
                                         EdgePolicy edge = EdgePolicy::Replicate);
[[nodiscard]] FilterResult median_filter(const SignalBuffer &signal, std::size_t window,
                                         std::size_t stride = 1,
                                         EdgePolicy edge = EdgePolicy::Replicate);

enum class Algorithm { Qara, Median };

struct ImageFilterResult {
    GrayImage image;
    CostCounters counters;
};

/// Rows are filtered independently; the parallel path splits rows across
/// threads and produces the same image as the serial path.
[[nodiscard]] ImageFilterResult filter_image(const GrayImage &img, const FilterConfig &cfg,
                                             Algorithm algorithm,
                                             kernels::Exec exec = kernels::Exec::Parallel);

struct QualityReport {
    double mse = 0.0;
    double psnr = std::numeric_limits<double>::infinity(); ///< dB, +inf when mse = 0
    std::uint64_t max_abs_error = 0;
    std::uint64_t residual_outlier_count = 0;
    std::uint64_t threshold = 64;
};

inline constexpr std::uint64_t kDefaultOutlierThreshold = 64;

/// MSE, PSNR against `peak`, max error and count of samples off by more
/// than `threshold`.
[[nodiscard]] QualityReport compute_quality_with_peak(std::span<const std::uint64_t> clean,
                                                      std::span<const std::uint64_t> filtered,
                                                      std::uint64_t threshold, double peak);
/// 8-bit peak.
[[nodiscard]] QualityReport compute_quality(std::span<const std::uint64_t> clean,
                                            std::span<const std::uint64_t> filtered,
                                            std::uint64_t threshold = kDefaultOutlierThreshold);
[[nodiscard]] QualityReport compute_quality(const GrayImage &clean, const GrayImage &filtered,
                                            std::uint64_t threshold = kDefaultOutlierThreshold);
[[nodiscard]] QualityReport compute_quality(const SignalBuffer &clean,
                                            const SignalBuffer &filtered,
                                            std::uint64_t threshold = kDefaultOutlierThreshold);

enum class ArtifactShape { Impulse, Block };

struct ArtifactSpec {
    std::size_t count = 0;
    std::uint64_t magnitude = 255; ///< value written into affected samples
    ArtifactShape shape = ArtifactShape::Impulse;
    std::size_t block_width = 8;  ///< Block only
    std::size_t block_height = 8; ///< Block only; ignored for signals
    std::uint64_t seed = 0;
};

template <typename Data> struct Corrupted {
    Data data;
    /// Affected flat positions (y·width + x for images), ascending.
    std::vector<std::size_t> mask;
};

[[nodiscard]] Corrupted<SignalBuffer> inject_artifacts(const SignalBuffer &clean,
                                                       const ArtifactSpec &spec);
[[nodiscard]] Corrupted<GrayImage> inject_artifacts(const GrayImage &clean,
                                                    const ArtifactSpec &spec);

/// Row `y` of an image as filter samples.
[[nodiscard]] std::vector<std::uint64_t> image_row(const GrayImage &img, std::size_t y);

} // namespace qara
