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
#include <doctest.h>

#include "qara/io.hpp"
#include "qara/report.hpp"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>

namespace fs = std::filesystem;
using qara::report::Json;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI through the shell with stderr discarded.
Run qara_cli(const std::string &args, const fs::path &cwd = fs::temp_directory_path()) {
    const std::string cmd =
        "cd '" + cwd.string() + "' && '" QARA_CLI_PATH "' " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

fs::path workdir(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / "qara_test_cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("distribution matches the frozen four-element vector") {
    const auto r = qara_cli("distribution --values 5,0,15,10 --reference 0 --bits 4 "
                            "--shots 1000000 --seed 1");
    REQUIRE(r.status == 0);
    const Json j = Json::parse(r.out);
    const std::vector<double> expect = {0.33459080882613029, 0.40866243665619658,
                                        0.078531556588991508, 0.17821519792868162};
    const auto probs = j.at("probs").get<std::vector<double>>();
    REQUIRE(probs.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(probs[i] - expect[i]) <= 1e-12);
    }
    const auto counts = j.at("counts").get<std::vector<std::uint64_t>>();
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    CHECK(total == 1000000);
    CHECK(j.at("shots") == 1000000);
    CHECK(j.at("seed") == 1);
    CHECK(qara_cli("distribution --values 5,0,15,10 --reference 0 --bits 4 --shots 1000000 "
                   "--seed 1")
              .out == r.out);
}

TEST_CASE("verify exits 0") { CHECK(qara_cli("verify").status == 0); }

TEST_CASE("gatecount table") {
    const auto r = qara_cli("gatecount --max-n 4");
    REQUIRE(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.size() == 4);
    CHECK(j.at("4").at("gate_count") == 25);
}

TEST_CASE("usage errors exit 2") {
    const fs::path dir = workdir("usage");
    CHECK(qara_cli("generate --kind flat --output in.pgm", dir).status == 0);
    CHECK(qara_cli("filter-image --input in.pgm --output out.pgm --window 3", dir).status == 2);
    CHECK_FALSE(fs::exists(dir / "out.pgm"));
    CHECK(qara_cli("filter-image --input in.pgm --output out.pgm --bogus", dir).status == 2);
    CHECK(qara_cli("", dir).status == 2);
    CHECK(qara_cli("distribution --values 1,2,3 --reference 0 --bits 4", dir).status == 2);
    CHECK(qara_cli("filter-image --input in.pgm --output out.pgm --mode fuzzy", dir).status == 2);
}

TEST_CASE("runtime failures exit 1") {
    const fs::path dir = workdir("runtime");
    CHECK(qara_cli("filter-image --input missing.pgm --output out.pgm", dir).status == 1);
    qara::io::write_file(dir / "bad.pgm", "P5\n2 2\n65535\n");
    CHECK(qara_cli("filter-image --input bad.pgm --output out.pgm", dir).status == 1);
    qara::io::write_file(dir / "bad.csv", "1\nx\n");
    CHECK(qara_cli("filter-signal --input bad.csv --output out.csv", dir).status == 1);
}

TEST_CASE("image pipeline and manifest replay") {
    const fs::path dir = workdir("image");
    REQUIRE(qara_cli("generate --kind textured --seed 2 --output clean.pgm", dir).status == 0);
    REQUIRE(qara_cli("inject-artifact --input clean.pgm --output noisy.pgm --shape block "
                     "--block-width 6 --block-height 6 --seed 2 --mask mask.csv",
                     dir)
                .status == 0);
    CHECK(qara::io::read_file(dir / "mask.csv").find("\n") != std::string::npos);
    REQUIRE(qara_cli("filter-image --input noisy.pgm --output out.pgm --clean clean.pgm "
                     "--mode sampled --seed 7 --window 16",
                     dir)
                .status == 0);
    const Json report = Json::parse(qara::io::read_file(dir / "out.pgm.report.json"));
    CHECK(report.at("quality").at("mse").get<double>() >= 0.0);
    CHECK(report.at("counters").at("windows") == 64 * 64);
    CHECK(report.at("config").at("filter").at("window") == 16);

    const std::string first = qara::io::read_file(dir / "out.pgm");
    const std::string first_report = qara::io::read_file(dir / "out.pgm.report.json");
    fs::remove(dir / "out.pgm");
    fs::remove(dir / "out.pgm.report.json");
    REQUIRE(qara_cli("replay --manifest out.pgm.manifest.json", dir).status == 0);
    CHECK(qara::io::read_file(dir / "out.pgm") == first);
    CHECK(qara::io::read_file(dir / "out.pgm.report.json") == first_report);

    const std::string noisy = qara::io::read_file(dir / "noisy.pgm");
    fs::remove(dir / "noisy.pgm");
    REQUIRE(qara_cli("replay --manifest noisy.pgm.manifest.json", dir).status == 0);
    CHECK(qara::io::read_file(dir / "noisy.pgm") == noisy);
}

TEST_CASE("signal pipeline removes two impulses") {
    const fs::path dir = workdir("signal");
    REQUIRE(qara_cli("generate --kind triangular --length 256 --amplitude 200 --output tri.csv",
                     dir)
                .status == 0);
    REQUIRE(qara_cli("inject-artifact --input tri.csv --output noisy.csv --count 2 --seed 11",
                     dir)
                .status == 0);
    for (const char *algo : {"qara", "median"}) {
        const std::string out = std::string(algo) + ".csv";
        REQUIRE(qara_cli("filter-signal --input noisy.csv --output " + out +
                             " --clean tri.csv --trace " + algo + ".trace.csv --algorithm " + algo,
                         dir)
                    .status == 0);
        const Json report = Json::parse(qara::io::read_file(dir / (out + ".report.json")));
        CHECK(report.at("quality").at("residual_outlier_count") == 0);
        const std::string trace = qara::io::read_file(dir / (std::string(algo) + ".trace.csv"));
        CHECK(trace.rfind("window_ordinal,reference,chosen_index,chosen_value\n", 0) == 0);
    }
}
