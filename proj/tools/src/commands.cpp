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

#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "zakotfs/ambiguity.hpp"
#include "zakotfs/waveforms.hpp"
#include "zakotfs/zak.hpp"

namespace zakotfs::cli {

using nlohmann::json;

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// ZC pilots go through the sequence so that any grid and root can be
// inspected, including the even-M and shared-factor cases.
DDSignal inspection_signal(const PilotSpec& p, const DDGrid& g) {
    if (p.kind == PilotSpec::Kind::Zc) return zc_signal_from_sequence(p.parameter, g);
    return pilot_signal(p.make(g));
}

json cmd_ambiguity(const ExperimentConfig& cfg, std::ostream& csv) {
    const LinkConfig& L = cfg.link;
    if (L.pilots.size() > 2) throw ConfigError("ambiguity: give one pilot (self) or two pilots (cross)");
    const DDSignal x = inspection_signal(L.pilots[0], L.grid);
    const AmbiguityMap A = L.pilots.size() == 1 ? self_ambiguity(x)
                                                : cross_ambiguity(x, inspection_signal(L.pilots[1], L.grid));
    csv << "k,l,abs_a\n";
    const int n = A.extent();
    std::size_t rows = 0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const double a = std::abs(A(k, l));
            if (cfg.ambiguity.nonzero_only && a < cfg.ambiguity.threshold) continue;
            csv << k << ',' << l << ',' << num(a) << '\n';
            ++rows;
        }
    return {{"mode", L.pilots.size() == 1 ? "self" : "cross"}, {"rows", rows}};
}

json cmd_papr(const ExperimentConfig& cfg, std::ostream& csv) {
    const LinkConfig& L = cfg.link;
    const int Q = cfg.papr.oversampling;
    const double beta = L.filter.beta_tau;
    csv << "pilot,parameter,papr_db\n";
    if (cfg.papr.include_point) {
        const PointPilot p(L.grid, L.grid.M() / 2, L.grid.N() / 2);
        csv << "point,0," << num(papr_db(oversampled_realization(point_pilot_signal(p), Q, beta))) << '\n';
    }
    for (const auto& spec : L.pilots) {
        const DDSignal x = pilot_signal(spec.make(L.grid));
        csv << spec.name() << ',' << spec.parameter << ',' << num(papr_db(oversampled_realization(x, Q, beta)))
            << '\n';
    }
    return {{"oversampling", Q}};
}

json cmd_nmse(const ExperimentConfig& cfg, std::ostream& csv, const Progress& progress) {
    csv << "pdr_db,nmse_db,pilot,nmse,stderr_db,trials\n";
    for (const auto& r : run_nmse(cfg.link, progress))
        csv << num(r.pdr_db) << ',' << num(r.nmse_db) << ',' << r.pilot << ',' << num(r.nmse) << ','
            << num(r.stderr_db) << ',' << r.trials << '\n';
    return json::object();
}

json cmd_ber(const ExperimentConfig& cfg, std::ostream& csv, const Progress& progress) {
    csv << "pdr_db,ber,iterations,pilot,stderr,trials\n";
    for (const auto& r : run_ber(cfg.link, progress))
        csv << num(r.pdr_db) << ',' << num(r.ber) << ',' << r.iterations << ',' << r.pilot << ','
            << num(r.stderr_ber) << ',' << r.trials << '\n';
    return {{"iterations_note", "iterations = 0 is the separate-subframe baseline"}};
}

json cmd_rach(const ExperimentConfig& cfg, std::ostream& csv, const Progress& progress) {
    const RachResult res = run_rach(cfg.rach, progress);
    csv << "snr_db,missed,detector,stderr,trials\n";
    for (const auto& r : res.rows)
        csv << num(r.snr_db) << ',' << num(r.missed) << ',' << r.detector << ',' << num(r.stderr_missed) << ','
            << r.trials << '\n';
    return {{"preamble_roots", res.roots}};
}

}  // namespace

json run_command(const std::string& command, const ExperimentConfig& cfg, std::ostream& csv,
                 const Progress& progress) {
    if (command == "ambiguity") return cmd_ambiguity(cfg, csv);
    if (command == "papr") return cmd_papr(cfg, csv);
    if (command == "nmse") return cmd_nmse(cfg, csv, progress);
    if (command == "ber") return cmd_ber(cfg, csv, progress);
    if (command == "rach") return cmd_rach(cfg, csv, progress);
    throw ConfigError("unknown command '" + command + "'");
}

void run_to_files(const std::string& command, const ExperimentConfig& cfg, const std::string& out_path,
                  const Progress& progress) {
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw ConfigError("cannot write '" + out_path + "'");
    const json extra = run_command(command, cfg, csv, progress);
    csv.close();
    if (!csv) throw ConfigError("write failed for '" + out_path + "'");

    const json meta = {{"command", command},
                       {"library_version", ZAKOTFS_VERSION_STRING},
                       {"config", to_json(cfg)},
                       {"results", extra}};
    std::ofstream side(out_path + ".json", std::ios::binary);
    side << meta.dump(2) << '\n';
    if (!side) throw ConfigError("write failed for '" + out_path + ".json'");
}

}  // namespace zakotfs::cli
