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

#include "config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "zakotfs/parallel.hpp"

namespace zakotfs::cli {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

template <class T>
void read(const json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

PilotSpec parse_pilot(const json& j, const std::string& where) {
    only_keys(j, where, {"kind", "root", "slope"});
    std::string kind;
    read(j, "kind", kind, where);
    PilotSpec p;
    if (kind == "zc") {
        if (j.contains("slope") || !j.contains("root")) throw ConfigError(where + ": zc pilot needs 'root'");
        p.kind = PilotSpec::Kind::Zc;
        read(j, "root", p.parameter, where);
    } else if (kind == "chirp") {
        if (j.contains("root") || !j.contains("slope")) throw ConfigError(where + ": chirp pilot needs 'slope'");
        p.kind = PilotSpec::Kind::Chirp;
        read(j, "slope", p.parameter, where);
    } else {
        throw ConfigError(where + ".kind: expected 'zc' or 'chirp'");
    }
    return p;
}

json pilot_json(const PilotSpec& p) {
    if (p.kind == PilotSpec::Kind::Zc) return {{"kind", "zc"}, {"root", p.parameter}};
    return {{"kind", "chirp"}, {"slope", p.parameter}};
}

}  // namespace

void ExperimentConfig::propagate() {
    link.trials = rach.trials = trials;
    link.seed = rach.seed = seed;
    link.threads = rach.threads = threads;
    rach.grid = link.grid;
    rach.filter = link.filter;
    rach.nu_max = link.nu_max;
}

ExperimentConfig parse_config(const json& j) {
    only_keys(j, "config", {"grid", "filter", "channel", "pilots", "link", "receiver", "rach", "ambiguity", "papr",
                            "trials", "seed"});
    ExperimentConfig c;
    LinkConfig& L = c.link;
    RachConfig& R = c.rach;

    if (j.contains("grid")) {
        const json& g = j["grid"];
        only_keys(g, "grid", {"M", "N", "doppler_period_hz"});
        int M = L.grid.M(), N = L.grid.N();
        double nu_p = L.grid.doppler_period();
        read(g, "M", M, "grid");
        read(g, "N", N, "grid");
        read(g, "doppler_period_hz", nu_p, "grid");
        L.grid = DDGrid(M, N, nu_p);
    }
    if (j.contains("filter")) {
        const json& f = j["filter"];
        only_keys(f, "filter", {"kind", "beta_tau", "beta_nu", "oversample", "truncation"});
        std::string kind = "rrc";
        read(f, "kind", kind, "filter");
        if (kind == "ideal") L.filter = PulseShapingFilter::ideal();
        else if (kind != "rrc") throw ConfigError("filter.kind: expected 'rrc' or 'ideal'");
        read(f, "beta_tau", L.filter.beta_tau, "filter");
        read(f, "beta_nu", L.filter.beta_nu, "filter");
        read(f, "oversample", L.filter.oversample, "filter");
        read(f, "truncation", L.filter.truncation, "filter");
    }
    if (j.contains("channel")) {
        const json& ch = j["channel"];
        only_keys(ch, "channel", {"model", "nu_max", "delay_jitter"});
        std::string model = "veh-a";
        read(ch, "model", model, "channel");
        if (model != "veh-a") throw ConfigError("channel.model: only 'veh-a' is supported");
        read(ch, "nu_max", L.nu_max, "channel");
        read(ch, "delay_jitter", R.delay_jitter, "channel");
    }
    if (j.contains("pilots")) {
        if (!j["pilots"].is_array() || j["pilots"].empty()) throw ConfigError("pilots: expected a non-empty array");
        L.pilots.clear();
        for (std::size_t i = 0; i < j["pilots"].size(); ++i)
            L.pilots.push_back(parse_pilot(j["pilots"][i], "pilots[" + std::to_string(i) + "]"));
    }
    if (j.contains("link")) {
        const json& l = j["link"];
        only_keys(l, "link", {"data_snr_db", "pdr_db", "pdr_reference", "readoff_margin", "tap_threshold"});
        read(l, "data_snr_db", L.data_snr_db, "link");
        read(l, "pdr_db", L.pdr_db, "link");
        std::string ref = "frame";
        read(l, "pdr_reference", ref, "link");
        if (ref == "frame") L.pdr_reference = PdrReference::Frame;
        else if (ref == "symbol") L.pdr_reference = PdrReference::Symbol;
        else throw ConfigError("link.pdr_reference: expected 'frame' or 'symbol'");
        read(l, "readoff_margin", L.readoff_margin, "link");
        read(l, "tap_threshold", L.tap_threshold, "link");
    }
    if (j.contains("receiver")) {
        const json& r = j["receiver"];
        only_keys(r, "receiver", {"iterations", "baseline"});
        read(r, "iterations", L.iterations, "receiver");
        read(r, "baseline", L.baseline, "receiver");
        if (L.iterations < 1) throw ConfigError("receiver.iterations: must be >= 1");
    }
    if (j.contains("rach")) {
        const json& r = j["rach"];
        only_keys(r, "rach", {"active_users", "preambles", "roots", "root_seed", "snr_db", "tau_max"});
        read(r, "active_users", R.active_users, "rach");
        read(r, "preambles", R.preambles, "rach");
        read(r, "roots", R.roots, "rach");
        read(r, "root_seed", R.root_seed, "rach");
        read(r, "snr_db", R.snr_db, "rach");
        read(r, "tau_max", R.tau_max, "rach");
        if (!R.roots.empty()) R.preambles = static_cast<int>(R.roots.size());
    }
    if (j.contains("ambiguity")) {
        const json& a = j["ambiguity"];
        only_keys(a, "ambiguity", {"nonzero_only", "threshold"});
        read(a, "nonzero_only", c.ambiguity.nonzero_only, "ambiguity");
        read(a, "threshold", c.ambiguity.threshold, "ambiguity");
    }
    if (j.contains("papr")) {
        const json& p = j["papr"];
        only_keys(p, "papr", {"oversampling", "include_point"});
        read(p, "oversampling", c.papr.oversampling, "papr");
        read(p, "include_point", c.papr.include_point, "papr");
    }
    read(j, "trials", c.trials, "config");
    read(j, "seed", c.seed, "config");
    c.threads = default_threads();
    c.propagate();
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const ExperimentConfig& c) {
    const LinkConfig& L = c.link;
    const RachConfig& R = c.rach;
    json pilots = json::array();
    for (const auto& p : L.pilots) pilots.push_back(pilot_json(p));
    return {
        {"grid", {{"M", L.grid.M()}, {"N", L.grid.N()}, {"doppler_period_hz", L.grid.doppler_period()}}},
        {"filter",
         {{"kind", L.filter.kind == PulseShapingFilter::Kind::Ideal ? "ideal" : "rrc"},
          {"beta_tau", L.filter.beta_tau},
          {"beta_nu", L.filter.beta_nu},
          {"oversample", L.filter.oversample},
          {"truncation", L.filter.truncation}}},
        {"channel", {{"model", "veh-a"}, {"nu_max", L.nu_max}, {"delay_jitter", R.delay_jitter}}},
        {"pilots", pilots},
        {"link",
         {{"data_snr_db", L.data_snr_db},
          {"pdr_db", L.pdr_db},
          {"pdr_reference", L.pdr_reference == PdrReference::Frame ? "frame" : "symbol"},
          {"readoff_margin", L.readoff_margin},
          {"tap_threshold", L.tap_threshold}}},
        {"receiver", {{"iterations", L.iterations}, {"baseline", L.baseline}}},
        {"rach",
         {{"active_users", R.active_users},
          {"preambles", R.preambles},
          {"roots", R.roots},
          {"root_seed", R.root_seed},
          {"snr_db", R.snr_db},
          {"tau_max", R.tau_max}}},
        {"ambiguity", {{"nonzero_only", c.ambiguity.nonzero_only}, {"threshold", c.ambiguity.threshold}}},
        {"papr", {{"oversampling", c.papr.oversampling}, {"include_point", c.papr.include_point}}},
        {"trials", c.trials},
        {"seed", c.seed},
    };
}

}  // namespace zakotfs::cli
