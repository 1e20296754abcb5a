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
 * @file verify.hpp
 * Self-check suites over the rotation operator and the engine, run by the
 * `verify` command.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qara {

struct CheckResult {
    std::string name;
    bool passed;
    double worst;     ///< largest deviation (or violation count) observed
    double tolerance; ///< bound `worst` is compared against
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
};

/// Unitarity, H·R·H = Rᵀ, decomposition fidelity, composition, backend
/// agreement, monotone ordering, best-case equality and the outlier bound.
[[nodiscard]] std::vector<CheckResult> run_verification(const VerifyOptions &opts = {});

} // namespace qara
