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
// qara: command-line front end.
//
//   qara verify [--seed S]
//   qara distribution --values 5,0,15,10 --reference 0 --bits 4 --shots N --seed S
//   qara gatecount --max-n N
//   qara filter-signal --input in.csv --output out.csv [filter flags]
//   qara filter-image --input in.pgm --output out.pgm [filter flags]
//   qara inject-artifact --input in.pgm --output out.pgm --count K --seed S
//   qara generate --kind textured --output img.pgm
//   qara replay --manifest run.manifest.json
//
// Exit status: 0 success, 1 runtime failure, 2 usage error.

#include "qara/engine.hpp"
#include "qara/filter.hpp"
#include "qara/io.hpp"
#include "qara/report.hpp"
#include "qara/rotation.hpp"
#include "qara/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace qara;
using report::Json;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct FilterFlags {
    std::string algorithm = "qara";
    std::size_t window = 8;
    int bits = 8;
    std::string mode = "argmax";
    std::uint64_t seed = 0;
    std::size_t stride = 1;
    std::string reference = "feedback";
    bool no_normalize = false;
    bool no_unique = false;
    std::uint64_t threshold = kDefaultOutlierThreshold;
    std::string clean;
    std::string report;
    std::string trace;
};

struct Options {
    std::uint64_t seed = 1;
    std::string manifest;

    // distribution
    std::vector<std::uint64_t> values;
    std::uint64_t reference = 0;
    int bits = 8;
    std::uint64_t shots = 0;
    std::string backend = "analytic";
    bool no_unique = false;

    // gatecount
    int max_n = 10;

    // files
    std::string input;
    std::string output;
    int signal_bits = 8;

    FilterFlags filter;

    // inject-artifact
    std::size_t count = 1;
    std::uint64_t magnitude = 255;
    std::string shape = "impulse";
    std::size_t block_width = 8;
    std::size_t block_height = 8;
    std::string mask;

    // generate
    std::string kind = "textured";
    std::size_t length = 256;
    std::uint64_t amplitude = 200;
    std::size_t width = 64;
    std::size_t height = 64;
};

bool is_pgm(const std::string &path) {
    std::string ext = fs::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".pgm";
}

std::string sibling(const std::string &output, const std::string &suffix) {
    return output + suffix;
}

FilterConfig make_config(const FilterFlags &f) {
    FilterConfig cfg;
    cfg.window = f.window;
    cfg.bit_width = f.bits;
    cfg.mode = f.mode == "sampled" ? RunMode::sampled(f.seed) : RunMode::argmax();
    cfg.normalize = !f.no_normalize;
    cfg.stride = f.stride;
    cfg.reference = f.reference == "window_mean" ? ReferencePolicy::WindowMean
                                                 : ReferencePolicy::Feedback;
    cfg.unique_mode = !f.no_unique;
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

Json filter_config_json(const FilterFlags &f, const FilterConfig &cfg) {
    Json j;
    j["algorithm"] = f.algorithm;
    j["filter"] = report::config_json(cfg);
    j["threshold"] = f.threshold;
    return j;
}

void emit_manifest(const std::string &path, const std::string &command,
                   const std::vector<std::string> &argv, std::uint64_t seed, Json config,
                   std::map<std::string, std::string> inputs,
                   std::map<std::string, std::string> outputs) {
    report::RunManifest m;
    m.command = command;
    m.argv = argv;
    m.seed = seed;
    m.config = std::move(config);
    m.inputs = std::move(inputs);
    m.outputs = std::move(outputs);
    m.version = io::kToolVersion;
    report::write_json(report::manifest_json(m), path);
}

int cmd_verify(const Options &o, const std::vector<std::string> &argv) {
    const auto results = run_verification({o.seed});
    const Json j = report::verification_json(results);
    std::cout << j.dump(2) << "\n";
    if (!o.manifest.empty()) {
        emit_manifest(o.manifest, "verify", argv, o.seed, Json::object(), {}, {});
    }
    for (const auto &r : results) {
        std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
    }
    return j["passed"].get<bool>() ? 0 : kExitRuntime;
}

int cmd_distribution(const Options &o, const std::vector<std::string> &argv) {
    Backend backend = Backend::Analytic;
    if (o.backend == "branches") {
        backend = Backend::Branches;
    } else if (o.backend == "statevector") {
        backend = Backend::Statevector;
    }
    EncodedWindow w = [&] {
        try {
            return encode_window(o.values, o.reference, o.bits, !o.no_unique);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        } catch (const std::out_of_range &e) {
            throw UsageError(e.what());
        }
    }();
    if (w.has_duplicate_words()) {
        backend = Backend::Statevector;
    }
    const Distribution d = distribution(w, backend);
    std::vector<std::uint64_t> counts;
    if (o.shots > 0) {
        counts = sample_index(d, o.shots, o.seed);
    }
    std::cout << report::distribution_json(d, counts, o.shots, o.seed).dump(2) << "\n";
    if (!o.manifest.empty()) {
        Json cfg;
        cfg["values"] = o.values;
        cfg["reference"] = o.reference;
        cfg["bits"] = o.bits;
        cfg["backend"] = o.backend;
        cfg["unique_mode"] = !o.no_unique;
        emit_manifest(o.manifest, "distribution", argv, o.seed, cfg, {}, {});
    }
    return 0;
}

int cmd_gatecount(const Options &o, const std::vector<std::string> &argv) {
    std::vector<GateMetrics> rows;
    for (int n = 1; n <= o.max_n; ++n) {
        rows.push_back(gate_metrics(n));
    }
    std::cout << report::gate_metrics_json(rows).dump(2) << "\n";
    if (!o.manifest.empty()) {
        emit_manifest(o.manifest, "gatecount", argv, 0, {{"max_n", o.max_n}}, {}, {});
    }
    return 0;
}

void write_report(const std::string &path, const FilterFlags &f, const FilterConfig &cfg,
                  const std::optional<QualityReport> &q, const CostCounters &counters) {
    Json j;
    j["config"] = filter_config_json(f, cfg);
    j["quality"] = q ? report::quality_json(*q) : Json(nullptr);
    j["counters"] = report::counters_json(counters);
    report::write_json(j, path);
}

int cmd_filter_signal(const Options &o, const std::vector<std::string> &argv) {
    const FilterFlags &f = o.filter;
    const FilterConfig cfg = make_config(f);
    const auto in = io::read_signal_csv(o.input, o.signal_bits);
    for (const auto &w : in.warnings) {
        std::cerr << "warning: " << o.input << ": " << w << "\n";
    }
    const SignalBuffer &signal = in.signal;
    const FilterResult r = f.algorithm == "median"
                               ? median_filter(signal, cfg.window, cfg.stride, cfg.edge)
                               : quantum_feedback_filter(signal, cfg);
    const SignalBuffer out{r.output, signal.bit_width};
    io::write_signal_csv(out, o.output);

    std::optional<QualityReport> q;
    std::map<std::string, std::string> inputs{{"input", o.input}};
    if (!f.clean.empty()) {
        const auto clean = io::read_signal_csv(f.clean, o.signal_bits).signal;
        q = compute_quality(clean, out, f.threshold);
        inputs["clean"] = f.clean;
    }
    const std::string report_path = f.report.empty() ? sibling(o.output, ".report.json") : f.report;
    write_report(report_path, f, cfg, q, r.counters);
    std::map<std::string, std::string> outputs{{"signal", o.output}, {"report", report_path}};
    if (!f.trace.empty()) {
        io::write_file(f.trace, report::trace_csv(r.trace));
        outputs["trace"] = f.trace;
    }
    const std::string manifest =
        o.manifest.empty() ? sibling(o.output, ".manifest.json") : o.manifest;
    emit_manifest(manifest, "filter-signal", argv, f.seed, filter_config_json(f, cfg), inputs,
                  outputs);
    return 0;
}

int cmd_filter_image(const Options &o, const std::vector<std::string> &argv) {
    const FilterFlags &f = o.filter;
    const FilterConfig cfg = make_config(f);
    const GrayImage img = io::read_pgm(o.input);
    if (img.width < cfg.window) {
        throw UsageError("image width " + std::to_string(img.width) +
                         " is narrower than the window (" + std::to_string(cfg.window) + ")");
    }
    const Algorithm algo = f.algorithm == "median" ? Algorithm::Median : Algorithm::Qara;
    const ImageFilterResult r = filter_image(img, cfg, algo);
    io::write_pgm(r.image, o.output);

    std::optional<QualityReport> q;
    std::map<std::string, std::string> inputs{{"input", o.input}};
    if (!f.clean.empty()) {
        q = compute_quality(io::read_pgm(f.clean), r.image, f.threshold);
        inputs["clean"] = f.clean;
    }
    const std::string report_path = f.report.empty() ? sibling(o.output, ".report.json") : f.report;
    write_report(report_path, f, cfg, q, r.counters);
    const std::string manifest =
        o.manifest.empty() ? sibling(o.output, ".manifest.json") : o.manifest;
    emit_manifest(manifest, "filter-image", argv, f.seed, filter_config_json(f, cfg), inputs,
                  {{"image", o.output}, {"report", report_path}});
    return 0;
}

std::string mask_csv(const std::vector<std::size_t> &mask) {
    std::string out;
    for (std::size_t i : mask) {
        out += std::to_string(i) + "\n";
    }
    return out;
}

int cmd_inject(const Options &o, const std::vector<std::string> &argv) {
    ArtifactSpec spec;
    spec.count = o.count;
    spec.magnitude = o.magnitude;
    spec.shape = o.shape == "block" ? ArtifactShape::Block : ArtifactShape::Impulse;
    spec.block_width = o.block_width;
    spec.block_height = o.block_height;
    spec.seed = o.seed;
    std::vector<std::size_t> mask;
    if (is_pgm(o.input)) {
        auto c = inject_artifacts(io::read_pgm(o.input), spec);
        io::write_pgm(c.data, o.output);
        mask = std::move(c.mask);
    } else {
        auto c = inject_artifacts(io::read_signal_csv(o.input, o.signal_bits).signal, spec);
        io::write_signal_csv(c.data, o.output);
        mask = std::move(c.mask);
    }
    std::map<std::string, std::string> outputs{{"data", o.output}};
    if (!o.mask.empty()) {
        io::write_file(o.mask, mask_csv(mask));
        outputs["mask"] = o.mask;
    }
    Json cfg;
    cfg["count"] = o.count;
    cfg["magnitude"] = o.magnitude;
    cfg["shape"] = o.shape;
    cfg["block_width"] = o.block_width;
    cfg["block_height"] = o.block_height;
    const std::string manifest =
        o.manifest.empty() ? sibling(o.output, ".manifest.json") : o.manifest;
    emit_manifest(manifest, "inject-artifact", argv, o.seed, cfg, {{"input", o.input}}, outputs);
    return 0;
}

int cmd_generate(const Options &o, const std::vector<std::string> &argv) {
    Json cfg;
    cfg["kind"] = o.kind;
    if (is_pgm(o.output)) {
        io::write_pgm(io::generate_image(io::parse_image_kind(o.kind), o.width, o.height, o.seed),
                      o.output);
        cfg["width"] = o.width;
        cfg["height"] = o.height;
    } else {
        io::write_signal_csv(
            io::generate_signal(io::parse_signal_kind(o.kind), o.length, o.amplitude, o.seed),
            o.output);
        cfg["length"] = o.length;
        cfg["amplitude"] = o.amplitude;
    }
    const std::string manifest =
        o.manifest.empty() ? sibling(o.output, ".manifest.json") : o.manifest;
    emit_manifest(manifest, "generate", argv, o.seed, cfg, {}, {{"data", o.output}});
    return 0;
}

void add_filter_flags(CLI::App *sub, Options &o) {
    FilterFlags &f = o.filter;
    sub->add_option("--input", o.input, "input file")->required();
    sub->add_option("--output", o.output, "filtered output file")->required();
    sub->add_option("--algorithm", f.algorithm, "qara or median")
        ->check(CLI::IsMember({"qara", "median"}));
    sub->add_option("--window", f.window, "window width M (power of two)");
    sub->add_option("--bits", f.bits, "register bit width n")->check(CLI::Range(1, 32));
    sub->add_option("--mode", f.mode, "argmax or sampled")
        ->check(CLI::IsMember({"argmax", "sampled"}));
    sub->add_option("--seed", f.seed, "seed for sampled mode");
    sub->add_option("--stride", f.stride, "evaluate every s-th position");
    sub->add_option("--reference", f.reference, "feedback or window_mean")
        ->check(CLI::IsMember({"feedback", "window_mean"}));
    sub->add_flag("--no-normalize", f.no_normalize, "skip per-window range stretch");
    sub->add_flag("--no-unique", f.no_unique, "do not append indices to data words");
    sub->add_option("--clean", f.clean, "clean reference for the quality report");
    sub->add_option("--threshold", f.threshold, "residual outlier threshold");
    sub->add_option("--report", f.report, "report JSON (default <output>.report.json)");
    sub->add_option("--trace", f.trace, "per-window trace CSV (signals only)");
    sub->add_option("--manifest", o.manifest, "manifest JSON (default <output>.manifest.json)");
}

int dispatch(std::vector<std::string> args);

int cmd_replay(const Options &o) {
    const auto m = report::parse_manifest(Json::parse(io::read_file(o.manifest)));
    if (m.command == "replay" || m.argv.empty() || m.argv.front() != m.command) {
        throw std::runtime_error("manifest does not describe a replayable run");
    }
    if (m.version != io::kToolVersion) {
        std::cerr << "warning: manifest written by version " << m.version << "\n";
    }
    return dispatch(m.argv);
}

int dispatch(std::vector<std::string> args) {
    const std::vector<std::string> argv = args;
    Options o;
    CLI::App app{"Amplitude-redistribution simulator and filter toolkit", "qara"};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::kToolVersion);

    auto *verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--seed", o.seed, "seed for the randomized checks");
    verify->add_option("--manifest", o.manifest, "write a run manifest");

    auto *dist = app.add_subcommand("distribution", "index distribution for one window");
    dist->add_option("--values", o.values, "window values")->required()->delimiter(',');
    dist->add_option("--reference", o.reference, "reference value")->required();
    dist->add_option("--bits", o.bits, "bit width n")->required()->check(CLI::Range(1, 32));
    dist->add_option("--shots", o.shots, "sampled measurements (0: none)");
    dist->add_option("--seed", o.seed, "sampling seed");
    dist->add_option("--backend", o.backend, "analytic, branches or statevector")
        ->check(CLI::IsMember({"analytic", "branches", "statevector"}));
    dist->add_flag("--no-unique", o.no_unique, "do not append indices to data words");
    dist->add_option("--manifest", o.manifest, "write a run manifest");

    auto *gates = app.add_subcommand("gatecount", "gate metrics table");
    gates->add_option("--max-n", o.max_n, "largest n")->check(CLI::Range(1, 30));
    gates->add_option("--manifest", o.manifest, "write a run manifest");

    auto *fsig = app.add_subcommand("filter-signal", "filter a CSV signal");
    add_filter_flags(fsig, o);
    fsig->add_option("--signal-bits", o.signal_bits, "bit width of the CSV samples")
        ->check(CLI::Range(1, 32));

    auto *fimg = app.add_subcommand("filter-image", "filter a PGM image row by row");
    add_filter_flags(fimg, o);

    auto *inject = app.add_subcommand("inject-artifact", "corrupt a PGM image or CSV signal");
    inject->add_option("--input", o.input, "input file (.pgm or CSV)")->required();
    inject->add_option("--output", o.output, "corrupted output")->required();
    inject->add_option("--count", o.count, "number of artifacts");
    inject->add_option("--magnitude", o.magnitude, "value written into artifacts");
    inject->add_option("--shape", o.shape, "impulse or block")
        ->check(CLI::IsMember({"impulse", "block"}));
    inject->add_option("--block-width", o.block_width, "block width");
    inject->add_option("--block-height", o.block_height, "block height (images)");
    inject->add_option("--seed", o.seed, "placement seed");
    inject->add_option("--mask", o.mask, "write affected positions as CSV");
    inject->add_option("--signal-bits", o.signal_bits, "bit width of CSV samples")
        ->check(CLI::Range(1, 32));
    inject->add_option("--manifest", o.manifest, "manifest JSON (default <output>.manifest.json)");

    auto *gen = app.add_subcommand("generate", "write a synthetic signal (.csv) or image (.pgm)");
    gen->add_option("--kind", o.kind,
                    "triangular|constant|ramp for signals, flat|vramp|hramp|textured|rings "
                    "for images");
    gen->add_option("--output", o.output, "output file")->required();
    gen->add_option("--length", o.length, "signal length");
    gen->add_option("--amplitude", o.amplitude, "signal amplitude");
    gen->add_option("--width", o.width, "image width");
    gen->add_option("--height", o.height, "image height");
    gen->add_option("--seed", o.seed, "texture seed");
    gen->add_option("--manifest", o.manifest, "manifest JSON (default <output>.manifest.json)");

    auto *replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
    replay->add_option("--manifest", o.manifest, "manifest JSON")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        const CLI::App *failed = &app;
        for (const CLI::App *sub : app.get_subcommands()) {
            failed = sub;
        }
        std::cerr << "qara: " << e.what() << "\n\n" << failed->help();
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o, argv);
        }
        if (dist->parsed()) {
            return cmd_distribution(o, argv);
        }
        if (gates->parsed()) {
            return cmd_gatecount(o, argv);
        }
        if (fsig->parsed()) {
            return cmd_filter_signal(o, argv);
        }
        if (fimg->parsed()) {
            return cmd_filter_image(o, argv);
        }
        if (inject->parsed()) {
            return cmd_inject(o, argv);
        }
        if (gen->parsed()) {
            return cmd_generate(o, argv);
        }
        if (replay->parsed()) {
            return cmd_replay(o);
        }
    } catch (const UsageError &e) {
        std::cerr << "qara: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "qara: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(std::move(args));
}
