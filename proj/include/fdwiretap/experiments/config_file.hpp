// SPDX-License-Identifier: Apache-2.0
//
// fdwiretap: secrecy-rate simulation for two-way full-duplex MIMOME links
// Copyright (C) 2026 The fdwiretap Authors
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

#ifndef FDWIRETAP_EXPERIMENTS_CONFIG_FILE_HPP
#define FDWIRETAP_EXPERIMENTS_CONFIG_FILE_HPP

#include "catalog.hpp"
#include "scenario.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdwiretap::experiments {

/// Malformed or invalid scenario file.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace config_detail {

using json = nlohmann::json;

inline void only_keys(const json &j, std::initializer_list<const char *> keys, const std::string &where) {
    if (!j.is_object())
        throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char *k : keys)
            known = known || it.key() == k;
        if (!known)
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

template <class T>
void read(const json &j, const char *key, T &out, const std::string &where) {
    if (!j.contains(key))
        return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception &) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

inline Point2 read_point(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(where + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline SystemConfig parse_system(const json &j, const std::string &where) {
    only_keys(j,
              {"n_alice", "n_bob", "n_eve", "streams", "alice", "bob", "eve", "path_loss_exponent",
               "tx_power_db", "p_alice_db", "p_bob_db", "noise", "eta", "sigma2_delta", "sigma2_delta_ba",
               "sigma2_delta_ab", "trials"},
              where);
    SystemConfig cfg;
    read(j, "n_alice", cfg.n_alice, where);
    read(j, "n_bob", cfg.n_bob, where);
    read(j, "n_eve", cfg.n_eve, where);
    read(j, "streams", cfg.b, where);
    if (j.contains("alice")) cfg.pos_alice = read_point(j["alice"], where + ".alice");
    if (j.contains("bob")) cfg.pos_bob = read_point(j["bob"], where + ".bob");
    if (j.contains("eve")) cfg.pos_eve = read_point(j["eve"], where + ".eve");
    read(j, "path_loss_exponent", cfg.alpha, where);
    double db = 25.0;
    read(j, "tx_power_db", db, where);
    double db_a = db, db_b = db;
    read(j, "p_alice_db", db_a, where);
    read(j, "p_bob_db", db_b, where);
    cfg.p_alice = db_to_linear(db_a);
    cfg.p_bob = db_to_linear(db_b);
    read(j, "noise", cfg.sigma2, where);
    read(j, "eta", cfg.eta, where);
    double sd = cfg.sigma2_delta_ba;
    read(j, "sigma2_delta", sd, where);
    cfg.sigma2_delta_ba = cfg.sigma2_delta_ab = sd;
    read(j, "sigma2_delta_ba", cfg.sigma2_delta_ba, where);
    read(j, "sigma2_delta_ab", cfg.sigma2_delta_ab, where);
    read(j, "trials", cfg.trials, where);
    return cfg;
}

inline std::vector<double> parse_values(const json &j, const std::string &where) {
    only_keys(j, {"variable", "values", "from", "to", "step"}, where);
    if (j.contains("values")) {
        if (j.contains("from") || j.contains("to") || j.contains("step"))
            throw ConfigError(where + ": give either values or from/to/step");
        std::vector<double> v;
        read(j, "values", v, where);
        return v;
    }
    if (!j.contains("from") || !j.contains("to") || !j.contains("step"))
        throw ConfigError(where + ": missing values");
    double from = 0, to = 0, step = 0;
    read(j, "from", from, where);
    read(j, "to", to, where);
    read(j, "step", step, where);
    if (!(step > 0.0) || to < from)
        throw ConfigError(where + ": need step > 0 and to >= from");
    return catalog_detail::range(from, to, step);
}

inline FinePolicy parse_fine(const json &j, const std::string &where) {
    only_keys(j, {"signal", "an", "xi"}, where);
    FinePolicy f;
    std::string signal = "equal", an = "uniform";
    read(j, "signal", signal, where);
    read(j, "an", an, where);
    if (signal == "equal") f.signal = SignalPolicy::Equal;
    else if (signal == "proportional") f.signal = SignalPolicy::Proportional;
    else throw ConfigError(where + ".signal: expected equal or proportional");
    if (an == "uniform") f.an = AnPolicy::Uniform;
    else if (an == "min_stream") f.an = AnPolicy::MinStream;
    else if (an == "eigen_inverse") f.an = AnPolicy::EigenInverse;
    else throw ConfigError(where + ".an: expected uniform, min_stream or eigen_inverse");
    if (j.contains("xi")) {
        double xi = 0;
        read(j, "xi", xi, where);
        f.xi = xi;
    }
    return f;
}

inline CaseSpec parse_case(const json &j, const std::string &where) {
    only_keys(j, {"id", "theta", "kappa", "coarse", "gamma", "fine"}, where);
    CaseSpec c;
    read(j, "id", c.id, where);
    read(j, "theta", c.theta, where);
    read(j, "kappa", c.kappa, where);
    std::string coarse = "algorithm";
    read(j, "coarse", coarse, where);
    if (coarse == "algorithm") c.coarse = CoarseMode::Algorithm;
    else if (coarse == "fixed") c.coarse = CoarseMode::Fixed;
    else if (coarse == "unknown_eve") c.coarse = CoarseMode::UnknownEve;
    else throw ConfigError(where + ".coarse: expected algorithm, fixed or unknown_eve");
    if (c.coarse == CoarseMode::Fixed && !j.contains("gamma"))
        throw ConfigError(where + ": fixed coarse mode needs gamma");
    read(j, "gamma", c.fixed_gamma, where);
    if (j.contains("fine"))
        c.fine = parse_fine(j["fine"], where + ".fine");
    return c;
}

inline Scenario parse_scenario(const json &j, const std::string &where) {
    only_keys(j, {"id", "description", "system", "sweep", "target", "cases", "hd_baseline",
                  "hd_uncertainty_scale", "region_grid_points"},
              where);
    Scenario s;
    read(j, "id", s.id, where);
    const std::string at = s.id.empty() ? where : where + "(" + s.id + ")";
    read(j, "description", s.description, at);
    if (j.contains("system"))
        s.base = parse_system(j["system"], at + ".system");
    if (!j.contains("sweep"))
        throw ConfigError(at + ": missing sweep");
    const json &sw = j["sweep"];
    if (!sw.is_object() || !sw.contains("variable") || !sw["variable"].is_string())
        throw ConfigError(at + ".sweep: missing variable");
    try {
        s.variable = parse_sweep_var(sw["variable"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(at + ".sweep: " + e.what());
    }
    s.values = parse_values(sw, at + ".sweep");
    std::string target = "both";
    read(j, "target", target, at);
    if (target == "both") s.target = FractionTarget::both;
    else if (target == "alice") s.target = FractionTarget::alice;
    else if (target == "bob") s.target = FractionTarget::bob;
    else throw ConfigError(at + ".target: expected both, alice or bob");
    if (!j.contains("cases") || !j["cases"].is_array())
        throw ConfigError(at + ": cases must be a list");
    for (std::size_t i = 0; i < j["cases"].size(); ++i)
        s.cases.push_back(parse_case(j["cases"][i], at + ".cases[" + std::to_string(i) + "]"));
    read(j, "hd_baseline", s.hd_baseline, at);
    read(j, "hd_uncertainty_scale", s.hd_uncertainty_scale, at);
    read(j, "region_grid_points", s.region_grid_points, at);
    try {
        validate(s);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return s;
}

} // namespace config_detail

/// Scenarios from a JSON document of the form {"scenarios": [...]}.
inline std::vector<Scenario> parse_scenarios(const std::string &text) {
    using config_detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    config_detail::only_keys(doc, {"scenarios"}, "config");
    if (!doc.contains("scenarios") || !doc["scenarios"].is_array() || doc["scenarios"].empty())
        throw ConfigError("config: scenarios must be a nonempty list");
    std::vector<Scenario> out;
    for (std::size_t i = 0; i < doc["scenarios"].size(); ++i) {
        auto s = config_detail::parse_scenario(doc["scenarios"][i], "scenarios[" + std::to_string(i) + "]");
        for (const auto &prev : out)
            if (prev.id == s.id)
                throw ConfigError("config: duplicate scenario id '" + s.id + "'");
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Scenario> load_scenarios(const std::string &path) {
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
        return parse_scenarios(ss.str());
    } catch (const ConfigError &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace fdwiretap::experiments

#endif
