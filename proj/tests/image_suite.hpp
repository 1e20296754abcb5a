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
 * Synthetic image suite shared by the filter tests and the acceptance run:
 * 64×64 textured vertical ramps, each carrying one white square block.
 */
#pragma once

#include "qara/io.hpp"

#include <cstdint>
#include <vector>

namespace qara::testing {

struct SuiteCase {
    std::uint64_t seed;
    std::size_t block;
    GrayImage clean;
    Corrupted<GrayImage> noisy;
};

inline constexpr std::size_t kSuiteSide = 64;
inline constexpr std::uint64_t kSuiteSeeds = 5;

inline SuiteCase suite_case(std::uint64_t seed, std::size_t block) {
    SuiteCase c{seed, block, io::generate_image(io::ImageKind::Textured, kSuiteSide, kSuiteSide,
                                                seed),
                {}};
    ArtifactSpec spec;
    spec.count = 1;
    spec.magnitude = 255;
    spec.shape = ArtifactShape::Block;
    spec.block_width = block;
    spec.block_height = block;
    spec.seed = seed;
    c.noisy = inject_artifacts(c.clean, spec);
    return c;
}

/// Seeds 1..5 for one block side.
inline std::vector<SuiteCase> image_suite(std::size_t block) {
    std::vector<SuiteCase> out;
    for (std::uint64_t seed = 1; seed <= kSuiteSeeds; ++seed) {
        out.push_back(suite_case(seed, block));
    }
    return out;
}

} // namespace qara::testing
