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
#include "qara/report.hpp"

#include "qara/io.hpp"

#include <cmath>
#include <sstream>

namespace qara::report {

Json distribution_json(const Distribution &analytic, const std::vector<std::uint64_t> &counts,
                       std::uint64_t shots, std::uint64_t seed) {
    Json j;
    j["probs"] = std::vector<double>(analytic.probs().begin(), analytic.probs().end());
    j["counts"] = counts;
    j["shots"] = shots;
    j["seed"] = seed;
    return j;
}

Json gate_metrics_json(const std::vector<GateMetrics> &rows) {
    Json j = Json::object();
    for (const GateMetrics &g : rows) {
        j[std::to_string(g.n)] = {{"gate_count", g.gate_count},
                                  {"serial_depth", g.serial_depth},
                                  {"parallel_depth", g.parallel_depth}};
    }
    return j;
}

Json quality_json(const QualityReport &q) {
    Json j;
    j["mse"] = q.mse;
    j["psnr"] = std::isinf(q.psnr) ? Json(nullptr) : Json(q.psnr);
    j["max_abs_error"] = q.max_abs_error;
    j["residual_outlier_count"] = q.residual_outlier_count;
    j["threshold"] = q.threshold;
    return j;
}

Json config_json(const FilterConfig &cfg) {
    Json j;
    j["window"] = cfg.window;
    j["bit_width"] = cfg.bit_width;
    j["mode"] = cfg.mode.kind == RunMode::Kind::Argmax ? "argmax" : "sampled";
    j["seed"] = cfg.mode.seed;
    j["normalize"] = cfg.normalize;
    j["stride"] = cfg.stride;
    j["edge"] = "replicate";
    j["reference"] = cfg.reference == ReferencePolicy::Feedback ? "feedback" : "window_mean";
    j["unique_mode"] = cfg.unique_mode;
    return j;
}

Json counters_json(const CostCounters &c) {
    return {{"windows", c.windows}, {"rotations", c.rotations}, {"comparisons", c.comparisons}};
}

Json verification_json(const std::vector<CheckResult> &results) {
    Json checks = Json::array();
    bool all = true;
    for (const CheckResult &r : results) {
        all = all && r.passed;
        checks.push_back({{"name", r.name},
                          {"passed", r.passed},
                          {"worst", r.worst},
                          {"tolerance", r.tolerance},
                          {"detail", r.detail}});
    }
    return {{"passed", all}, {"checks", checks}};
}

std::string trace_csv(const std::vector<WindowTrace> &trace) {
    std::ostringstream out;
    out << "window_ordinal,reference,chosen_index,chosen_value\n";
    for (const WindowTrace &w : trace) {
        out << w.ordinal << ',' << w.reference << ',' << w.chosen_index << ',' << w.chosen_value
            << '\n';
    }
    return out.str();
}

Json manifest_json(const RunManifest &m) {
    Json j;
    j["tool"] = "qara";
    j["version"] = m.version;
    j["command"] = m.command;
    j["argv"] = m.argv;
    j["seed"] = m.seed;
    j["config"] = m.config;
    j["inputs"] = Json(m.inputs);
    j["outputs"] = Json(m.outputs);
    return j;
}

RunManifest parse_manifest(const Json &j) {
    for (const char *key : {"command", "argv", "seed", "version"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("manifest is missing '") + key + "'");
        }
    }
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.argv = j.at("argv").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    if (j.contains("config")) {
        m.config = j.at("config");
    }
    if (j.contains("inputs")) {
        m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    }
    if (j.contains("outputs")) {
        m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
    }
    return m;
}

void write_json(const Json &j, const std::filesystem::path &path) {
    io::write_file(path, j.dump(2) + "\n");
}

} // namespace qara::report
