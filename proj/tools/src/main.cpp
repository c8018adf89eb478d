// SPDX-License-Identifier: Apache-2.0
//
// zakotfs - delay-Doppler signal processing with Zadoff-Chu spread pilots
// Copyright (C) 2026 The zakotfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace zakotfs::cli;

    CLI::App app{"zakotfs: delay-Doppler pilot, channel and random-access experiments"};
    app.set_version_flag("--version", std::string(ZAKOTFS_VERSION_STRING));
    std::string config_path, out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    bool quiet = false;
    app.add_option("--config", config_path, "JSON experiment config (defaults are used when omitted)")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "master seed override");
    app.add_option("--out", out_path, "output CSV path; metadata goes to <out>.json");
    app.add_option("--trials", trials, "Monte Carlo trial count override");
    app.add_flag("-q,--quiet", quiet, "no progress on stderr");
    app.require_subcommand(1);
    const char* commands[][2] = {{"ambiguity", "self/cross-ambiguity magnitudes of the configured pilots"},
                                 {"papr", "PAPR of point and spread pilots"},
                                 {"nmse", "channel-estimation NMSE against pilot-to-data ratio"},
                                 {"ber", "uncoded 4-QAM BER against pilot-to-data ratio, with turbo iterations"},
                                 {"rach", "missed-detection probability of the preamble detectors"}};
    for (auto& c : commands) app.add_subcommand(c[0], c[1])->fallthrough();
    app.footer("Thread count: ZAKOTFS_THREADS (default: all hardware threads).");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        ExperimentConfig cfg = config_path.empty() ? parse_config(nlohmann::json::object()) : load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (trials) cfg.trials = *trials;
        cfg.propagate();
        if (out_path.empty()) out_path = command + ".csv";

        zakotfs::Progress progress;
        if (!quiet)
            progress = [&](std::size_t done, std::size_t total) {
                std::fprintf(stderr, "\r%s: %zu/%zu trials", command.c_str(), done, total);
                if (done == total) std::fputc('\n', stderr);
            };
        run_to_files(command, cfg, out_path, progress);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "zakotfs %s: error: %s\n", command.c_str(), e.what());
        return 1;
    }
    return 0;
}
