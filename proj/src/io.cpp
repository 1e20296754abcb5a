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
#include "qara/io.hpp"

#include "qara/random.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qara::io {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Reads one unsigned header field, skipping whitespace and '#' comments.
std::size_t header_field(const std::string &bytes, std::size_t &pos, const char *what) {
    for (;;) {
        while (pos < bytes.size() && is_space(bytes[pos])) {
            ++pos;
        }
        if (pos < bytes.size() && bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') {
                ++pos;
            }
            continue;
        }
        break;
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos])) != 0) {
        ++pos;
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(bytes.data() + start, bytes.data() + pos, value);
    if (start == pos || ec != std::errc{} || ptr != bytes.data() + pos) {
        throw PgmHeaderError(std::string("PGM header: bad or missing ") + what);
    }
    return value;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) {
        ++b;
    }
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

bool is_header_name(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s == "value" || s == "sample" || s == "samples" || s == "signal";
}

std::uint8_t to_pixel(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

} // namespace

CsvError::CsvError(const std::string &message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

GrayImage parse_pgm(const std::string &bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw PgmHeaderError("PGM header: expected magic number P5");
    }
    std::size_t pos = 2;
    if (pos >= bytes.size() || !is_space(bytes[pos])) {
        throw PgmHeaderError("PGM header: expected whitespace after magic number");
    }
    const std::size_t width = header_field(bytes, pos, "width");
    const std::size_t height = header_field(bytes, pos, "height");
    const std::size_t maxval = header_field(bytes, pos, "maxval");
    if (width == 0 || height == 0) {
        throw PgmHeaderError("PGM header: zero dimension");
    }
    if (maxval != 255) {
        throw PgmDepthError("PGM maxval " + std::to_string(maxval) +
                            " unsupported; only 8-bit (maxval 255) images are read");
    }
    if (pos >= bytes.size() || !is_space(bytes[pos])) {
        throw PgmHeaderError("PGM header: expected a single whitespace before the raster");
    }
    ++pos;
    const std::size_t need = width * height;
    if (bytes.size() - pos < need) {
        throw PgmTruncatedError("PGM raster truncated: expected " + std::to_string(need) +
                                " bytes, found " + std::to_string(bytes.size() - pos));
    }
    std::vector<std::uint8_t> pixels(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                                     bytes.begin() + static_cast<std::ptrdiff_t>(pos + need));
    return GrayImage(width, height, std::move(pixels));
}

std::string format_pgm(const GrayImage &img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                      "\n255\n";
    out.append(img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage read_pgm(const std::filesystem::path &path) { return parse_pgm(read_file(path)); }

void write_pgm(const GrayImage &img, const std::filesystem::path &path) {
    write_file(path, format_pgm(img));
}

CsvSignal parse_signal_csv(const std::string &text, int bit_width) {
    CsvSignal out;
    out.signal.bit_width = bit_width;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    bool any_line = false;
    while (std::getline(in, raw)) {
        ++line;
        const std::string tok = trim(raw);
        if (tok.empty()) {
            continue;
        }
        const bool first = !any_line;
        any_line = true;
        if (first && is_header_name(tok)) {
            continue;
        }
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw CsvError("expected a non-negative integer, got '" + tok + "'", line);
        }
        if (bit_width < 64 && v >= (std::uint64_t{1} << bit_width)) {
            throw CsvError("value " + tok + " exceeds " + std::to_string(bit_width) + " bits",
                           line);
        }
        out.signal.samples.push_back(v);
    }
    if (out.signal.samples.empty()) {
        out.warnings.emplace_back("signal file contains no samples");
    }
    return out;
}

std::string format_signal_csv(const SignalBuffer &signal) {
    std::string out;
    for (std::uint64_t v : signal.samples) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

CsvSignal read_signal_csv(const std::filesystem::path &path, int bit_width) {
    return parse_signal_csv(read_file(path), bit_width);
}

void write_signal_csv(const SignalBuffer &signal, const std::filesystem::path &path) {
    write_file(path, format_signal_csv(signal));
}

SignalKind parse_signal_kind(const std::string &name) {
    if (name == "triangular") {
        return SignalKind::Triangular;
    }
    if (name == "constant") {
        return SignalKind::Constant;
    }
    if (name == "ramp") {
        return SignalKind::Ramp;
    }
    throw std::invalid_argument("unknown signal kind '" + name + "'");
}

SignalBuffer generate_signal(SignalKind kind, std::size_t length, std::uint64_t amplitude,
                             std::uint64_t /*seed*/) {
    if (length < 2) {
        throw std::invalid_argument("signal length must be >= 2");
    }
    if (amplitude >= (std::uint64_t{1} << kMaxBitWidth)) {
        throw std::invalid_argument("amplitude exceeds 32 bits");
    }
    SignalBuffer out;
    out.bit_width = std::max(1, static_cast<int>(std::bit_width(amplitude)));
    out.samples.resize(length);
    const double a = static_cast<double>(amplitude);
    const double last = static_cast<double>(length - 1);
    for (std::size_t i = 0; i < length; ++i) {
        const double x = static_cast<double>(i) / last;
        double v = a;
        if (kind == SignalKind::Ramp) {
            v = a * x;
        } else if (kind == SignalKind::Triangular) {
            v = a * (1.0 - std::abs(2.0 * x - 1.0));
        }
        out.samples[i] = static_cast<std::uint64_t>(std::round(v));
    }
    return out;
}

ImageKind parse_image_kind(const std::string &name) {
    if (name == "flat") {
        return ImageKind::Flat;
    }
    if (name == "vramp") {
        return ImageKind::VerticalRamp;
    }
    if (name == "hramp") {
        return ImageKind::HorizontalRamp;
    }
    if (name == "textured") {
        return ImageKind::Textured;
    }
    if (name == "rings") {
        return ImageKind::Rings;
    }
    throw std::invalid_argument("unknown image kind '" + name + "'");
}

GrayImage generate_image(ImageKind kind, std::size_t width, std::size_t height,
                         std::uint64_t seed) {
    if (width == 0 || height == 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    GrayImage img(width, height, std::uint8_t{128});
    Rng rng(derive_seed(seed, {0x7e47u}));
    const double hx = width > 1 ? static_cast<double>(width - 1) : 1.0;
    const double hy = height > 1 ? static_cast<double>(height - 1) : 1.0;
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const double fx = static_cast<double>(x) / hx;
            const double fy = static_cast<double>(y) / hy;
            double v = 128.0;
            switch (kind) {
            case ImageKind::Flat:
                break;
            case ImageKind::VerticalRamp:
                v = 32.0 + 160.0 * fy;
                break;
            case ImageKind::HorizontalRamp:
                v = 32.0 + 160.0 * fx;
                break;
            case ImageKind::Textured:
                v = 32.0 + 160.0 * fy + static_cast<double>(uniform_below(rng, 9)) - 4.0;
                break;
            case ImageKind::Rings: {
                const double dx = fx - 0.5;
                const double dy = fy - 0.5;
                v = 112.0 + 48.0 * std::cos(12.0 * std::sqrt(dx * dx + dy * dy));
                break;
            }
            }
            img.at(x, y) = to_pixel(v);
        }
    }
    return img;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("write to '" + path.string() + "' failed");
    }
}

} // namespace qara::io
