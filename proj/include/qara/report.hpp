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
 * @file report.hpp
 * JSON reports with insertion-ordered keys, trace CSV and run manifests.
 */
#pragma once

#include "qara/engine.hpp"
#include "qara/filter.hpp"
#include "qara/rotation.hpp"
#include "qara/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace qara::report {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json distribution_json(const Distribution &analytic,
                                     const std::vector<std::uint64_t> &counts,
                                     std::uint64_t shots, std::uint64_t seed);

/// Keyed by n as a decimal string.
[[nodiscard]] Json gate_metrics_json(const std::vector<GateMetrics> &rows);

/// PSNR of an exact match is written as null.
[[nodiscard]] Json quality_json(const QualityReport &q);

[[nodiscard]] Json config_json(const FilterConfig &cfg);
[[nodiscard]] Json counters_json(const CostCounters &c);
[[nodiscard]] Json verification_json(const std::vector<CheckResult> &results);

/// window_ordinal,reference,chosen_index,chosen_value
[[nodiscard]] std::string trace_csv(const std::vector<WindowTrace> &trace);

/// Enough to re-execute a run: the argument vector is replayed verbatim.
struct RunManifest {
    std::string command;
    std::vector<std::string> argv; ///< arguments after the program name
    std::uint64_t seed = 0;
    Json config = Json::object();
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> outputs;
    std::string version;
};

[[nodiscard]] Json manifest_json(const RunManifest &m);
/// Throws std::invalid_argument when a required key is missing.
[[nodiscard]] RunManifest parse_manifest(const Json &j);

void write_json(const Json &j, const std::filesystem::path &path);

} // namespace qara::report
