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
 * @file io.hpp
 * PGM images, integer CSV signals, synthetic data and run manifests.
 */
#pragma once

#include "qara/filter.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace qara::io {

inline constexpr const char *kToolVersion = "0.1.0";

class PgmError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
/// Magic number, dimensions or separators are not a P5 header.
class PgmHeaderError : public PgmError {
  public:
    using PgmError::PgmError;
};
/// maxval other than 255.
class PgmDepthError : public PgmError {
  public:
    using PgmError::PgmError;
};
/// Fewer payload bytes than width·height.
class PgmTruncatedError : public PgmError {
  public:
    using PgmError::PgmError;
};

class CsvError : public std::runtime_error {
  public:
    CsvError(const std::string &message, std::size_t line);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

[[nodiscard]] GrayImage parse_pgm(const std::string &bytes);
[[nodiscard]] std::string format_pgm(const GrayImage &img);
[[nodiscard]] GrayImage read_pgm(const std::filesystem::path &path);
void write_pgm(const GrayImage &img, const std::filesystem::path &path);

struct CsvSignal {
    SignalBuffer signal;
    std::vector<std::string> warnings;
};

/// One integer per line. A first line reading `value`, `sample`, `samples` or
/// `signal` (any case) is taken as a header; blank lines are skipped.
[[nodiscard]] CsvSignal parse_signal_csv(const std::string &text, int bit_width = 8);
[[nodiscard]] std::string format_signal_csv(const SignalBuffer &signal);
[[nodiscard]] CsvSignal read_signal_csv(const std::filesystem::path &path, int bit_width = 8);
void write_signal_csv(const SignalBuffer &signal, const std::filesystem::path &path);

enum class SignalKind { Triangular, Constant, Ramp };

[[nodiscard]] SignalKind parse_signal_kind(const std::string &name);

/// Deterministic waveform; triangular rises from 0 to `amplitude` and falls
/// back symmetrically. The bit width is the smallest that holds `amplitude`.
/// `seed` is accepted for interface symmetry; none of the kinds is random.
[[nodiscard]] SignalBuffer generate_signal(SignalKind kind, std::size_t length,
                                           std::uint64_t amplitude, std::uint64_t seed = 0);

enum class ImageKind {
    Flat,           ///< every pixel 128
    VerticalRamp,   ///< brightness changes down the columns, rows constant
    HorizontalRamp, ///< brightness changes along the rows
    Textured,       ///< vertical ramp plus seeded ±4 texture
    Rings,          ///< smooth concentric pattern
};

[[nodiscard]] ImageKind parse_image_kind(const std::string &name);
[[nodiscard]] GrayImage generate_image(ImageKind kind, std::size_t width, std::size_t height,
                                       std::uint64_t seed = 0);

[[nodiscard]] std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &bytes);

} // namespace qara::io
