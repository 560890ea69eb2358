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

#ifndef FDWIRETAP_EXPERIMENTS_SCENARIO_HPP
#define FDWIRETAP_EXPERIMENTS_SCENARIO_HPP

#include "../coarse_alloc.hpp"
#include "../config.hpp"
#include "../fine_alloc.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdwiretap::experiments {

enum class SweepVar { power_fraction, eve_x, eta, tx_power_db, xi, kappa };

inline constexpr std::string_view to_string(SweepVar v) {
    switch (v) {
    case SweepVar::power_fraction: return "power_fraction";
    case SweepVar::eve_x: return "eve_x";
    case SweepVar::eta: return "eta";
    case SweepVar::tx_power_db: return "tx_power_db";
    case SweepVar::xi: return "xi";
    case SweepVar::kappa: return "kappa";
    }
    return "?";
}

inline SweepVar parse_sweep_var(std::string_view s) {
    for (auto v : {SweepVar::power_fraction, SweepVar::eve_x, SweepVar::eta, SweepVar::tx_power_db,
                   SweepVar::xi, SweepVar::kappa})
        if (to_string(v) == s)
            return v;
    throw std::invalid_argument("unknown sweep variable '" + std::string(s) + "'");
}

// Which node's signal fraction a power_fraction sweep drives.
enum class FractionTarget { both, alice, bob };

enum class CoarseMode {
    Algorithm,  // maximize the approximate sum secrecy
    Fixed,      // gamma given
    UnknownEve, // no large-scale knowledge of Eve: all power on data
};

struct CaseSpec {
    std::string id;
    int theta = 0;
    double kappa = 0.0;
    CoarseMode coarse = CoarseMode::Algorithm;
    double fixed_gamma = 1.0;
    FinePolicy fine{};
};

struct Scenario {
    std::string id;
    std::string description;
    SystemConfig base{};
    SweepVar variable = SweepVar::eta;
    std::vector<double> values;
    FractionTarget target = FractionTarget::both;
    std::vector<CaseSpec> cases;
    bool hd_baseline = false;
    // Scale on the estimation-error variances of the half-duplex comparator.
    double hd_uncertainty_scale = 1.0;
    // Also export the approximate secrecy regions on a grid (no Monte Carlo).
    int region_grid_points = 0;
};

/// One CSV line: Monte Carlo means for one case at one sweep value.
struct SweepRow {
    std::string scenario;
    std::string case_id;
    std::string variable;
    double value = 0;
    double r_ba = 0, r_ab = 0, r_ea = 0, r_eb = 0;
    double r_sa = 0, r_sb = 0, sum_secrecy = 0;
    double approx_r_ba = 0, approx_r_ab = 0, approx_r_ea = 0, approx_r_eb = 0;
    double approx_sum_secrecy = 0;
    double gamma_a = 0, gamma_b = 0;
    int iterations = 0;
    int converged = 0;
    int trials = 0;
    int failed = 0;   // trials that threw and were left out of the means
    int floored = 0;  // trials whose Eve covariance needed flooring
    int fallbacks = 0;
    // Half-duplex comparator; NaN when the scenario has none.
    double hd_r_ba = 0, hd_r_ab = 0, hd_r_ea = 0, hd_r_eb = 0, hd_sum_secrecy = 0;
};

/// One point of an exported secrecy-region grid.
struct RegionRow {
    std::string scenario;
    std::string case_id;
    double gamma_a = 0, gamma_b = 0;
    double objective = 0;
    double approx_secrecy_a = 0, approx_secrecy_b = 0;
    double boundary_res_a = 0, boundary_res_b = 0;
};

/// Config for one sweep value, before case overrides.
inline SystemConfig apply_sweep(SystemConfig cfg, SweepVar var, double value) {
    switch (var) {
    case SweepVar::eve_x: cfg.pos_eve.x = value; break;
    case SweepVar::eta: cfg.eta = value; break;
    case SweepVar::tx_power_db:
        cfg.p_alice = db_to_linear(value);
        cfg.p_bob = db_to_linear(value);
        break;
    case SweepVar::kappa:
        cfg.kappa_a = value;
        cfg.kappa_b = value;
        break;
    case SweepVar::power_fraction:
    case SweepVar::xi:
        break; // act on the case, not the config
    }
    return cfg;
}

/// Case after sweep overrides, plus the config it runs under.
struct ResolvedCase {
    SystemConfig cfg;
    CaseSpec spec;
    // Fixed fractions when the coarse step is not the optimizer.
    std::optional<Vec2> gammas;
};

inline ResolvedCase resolve_case(const Scenario &sc, const CaseSpec &cs, double value) {
    ResolvedCase rc;
    rc.spec = cs;
    rc.cfg = sc.base;
    rc.cfg.theta = cs.theta;
    rc.cfg.kappa_a = cs.kappa;
    rc.cfg.kappa_b = cs.kappa;
    rc.cfg = apply_sweep(rc.cfg, sc.variable, value);
    if (sc.variable == SweepVar::xi)
        rc.spec.fine.xi = value;

    if (cs.coarse == CoarseMode::Fixed)
        rc.gammas = Vec2{cs.fixed_gamma, cs.fixed_gamma};
    else if (cs.coarse == CoarseMode::UnknownEve)
        rc.gammas = Vec2{1.0, 1.0};
    if (sc.variable == SweepVar::power_fraction) {
        Vec2 g = rc.gammas.value_or(Vec2{cs.fixed_gamma, cs.fixed_gamma});
        if (sc.target != FractionTarget::bob) g[0] = value;
        if (sc.target != FractionTarget::alice) g[1] = value;
        rc.gammas = g;
    }
    return rc;
}

inline void validate(const Scenario &sc) {
    auto fail = [&](const std::string &what) {
        throw std::invalid_argument("scenario '" + sc.id + "': " + what);
    };
    auto plain = [](const std::string &id) {
        return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
    };
    if (!plain(sc.id)) fail("id must be nonempty and use only letters, digits, '_', '-' or '.'");
    if (sc.values.empty()) fail("sweep value list is empty");
    if (!std::is_sorted(sc.values.begin(), sc.values.end())) fail("sweep values must be sorted");
    if (sc.cases.empty()) fail("no cases");
    if (!(sc.hd_uncertainty_scale > 0.0)) fail("hd_uncertainty_scale must be positive");
    if (sc.region_grid_points == 1 || sc.region_grid_points < 0) fail("region grid needs >= 2 points");
    std::vector<std::string> ids;
    for (const auto &cs : sc.cases) {
        if (!plain(cs.id)) fail("case id '" + cs.id + "' must use only letters, digits, '_', '-' or '.'");
        if (std::find(ids.begin(), ids.end(), cs.id) != ids.end()) fail("duplicate case id " + cs.id);
        ids.push_back(cs.id);
        if (!(cs.fixed_gamma >= 0.0 && cs.fixed_gamma <= 1.0)) fail("case " + cs.id + ": gamma outside [0, 1]");
        if (cs.fine.xi && !(*cs.fine.xi >= 0.0 && *cs.fine.xi <= 1.0)) fail("case " + cs.id + ": xi outside [0, 1]");
        for (double v : sc.values) {
            try {
                fdwiretap::validate(resolve_case(sc, cs, v).cfg);
            } catch (const std::invalid_argument &e) {
                fail("case " + cs.id + " at " + std::string(to_string(sc.variable)) + "=" +
                     std::to_string(v) + ": " + e.what());
            }
        }
    }
    if (sc.variable == SweepVar::power_fraction || sc.variable == SweepVar::xi)
        for (double v : sc.values)
            if (!(v >= 0.0 && v <= 1.0)) fail("fraction sweep values must lie in [0, 1]");
}

} // namespace fdwiretap::experiments

#endif
