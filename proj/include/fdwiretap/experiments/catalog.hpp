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

#ifndef FDWIRETAP_EXPERIMENTS_CATALOG_HPP
#define FDWIRETAP_EXPERIMENTS_CATALOG_HPP

#include "scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdwiretap::experiments {

inline constexpr const char *kCatalogVersion = "1";

namespace catalog_detail {

inline std::vector<double> range(double first, double last, double step) {
    std::vector<double> v;
    const int n = static_cast<int>(std::lround((last - first) / step));
    for (int i = 0; i <= n; ++i)
        v.push_back(first + i * step);
    return v;
}

inline FinePolicy equal_split() { return {SignalPolicy::Equal, AnPolicy::Uniform, std::nullopt}; }

inline FinePolicy adaptive_split(double xi) {
    return {SignalPolicy::Proportional, AnPolicy::EigenInverse, xi};
}

inline CaseSpec fixed_case(std::string id, int theta, double kappa, double gamma) {
    return {std::move(id), theta, kappa, CoarseMode::Fixed, gamma, equal_split()};
}

// The seven cases compared in the sweep figures.
inline std::vector<CaseSpec> standard_cases() {
    const FinePolicy fine = adaptive_split(0.9);
    const FinePolicy greedy{SignalPolicy::Proportional, AnPolicy::Uniform, std::nullopt};
    return {
        fixed_case("fixed_g08", 0, 0.0, 0.8),
        {"known_k0_th0", 0, 0.0, CoarseMode::Algorithm, 1.0, fine},
        {"known_k0_th1", 1, 0.0, CoarseMode::Algorithm, 1.0, fine},
        {"known_k01_th0", 0, 0.1, CoarseMode::Algorithm, 1.0, fine},
        {"known_k01_th1", 1, 0.1, CoarseMode::Algorithm, 1.0, fine},
        {"unknown_k0", 0, 0.0, CoarseMode::UnknownEve, 1.0, greedy},
        {"unknown_k01", 0, 0.1, CoarseMode::UnknownEve, 1.0, greedy},
    };
}

inline Scenario rates_vs_fraction(std::string id, FractionTarget target) {
    Scenario s;
    s.id = std::move(id);
    s.description = std::string("rates and approximations versus the signal fraction of ") +
                    (target == FractionTarget::alice ? "Alice" : "Bob") + ", other node at 0.5";
    s.base.pos_eve = {0.5, 5.0};
    s.variable = SweepVar::power_fraction;
    s.values = range(0.1, 1.0, 0.1);
    s.target = target;
    s.cases = {fixed_case("theta0", 0, 0.1, 0.5), fixed_case("theta1", 1, 0.1, 0.5)};
    return s;
}

inline Scenario hd_comparison(std::string id, double scale, std::string scale_text) {
    Scenario s;
    s.id = std::move(id);
    s.description = "IBFD versus HD sum secrecy, equal allocation, HD uncertainty x" + scale_text;
    s.base.eta = 0.0;
    s.variable = SweepVar::power_fraction;
    s.values = range(0.1, 1.0, 0.1);
    s.cases = {fixed_case("theta0", 0, 0.1, 1.0), fixed_case("theta1", 1, 0.1, 1.0)};
    s.hd_baseline = true;
    s.hd_uncertainty_scale = scale;
    return s;
}

} // namespace catalog_detail

/// Built-in scenarios, one per figure.
inline std::vector<Scenario> builtin_catalog() {
    using namespace catalog_detail;
    std::vector<Scenario> out;

    out.push_back(rates_vs_fraction("fig2a", FractionTarget::alice));
    out.push_back(rates_vs_fraction("fig2b", FractionTarget::bob));

    {
        Scenario s;
        s.id = "fig3";
        s.description = "approximate secrecy regions over (gamma_A, gamma_B) for theta 0 and 1";
        s.base.pos_eve = {0.5, 5.0};
        s.variable = SweepVar::kappa;
        s.values = {0.1};
        s.cases = {{"theta0", 0, 0.1, CoarseMode::Algorithm, 1.0, equal_split()},
                   {"theta1", 1, 0.1, CoarseMode::Algorithm, 1.0, equal_split()}};
        s.region_grid_points = 101;
        out.push_back(s);
    }

    out.push_back(hd_comparison("fig4a", 1.0, "1"));
    out.push_back(hd_comparison("fig4b", 1.5, "1.5"));

    {
        Scenario s;
        s.id = "fig5";
        s.description = "Eve rate versus the AN split xi for two fine AN policies, gamma 0.5";
        s.base.pos_eve = {0.5, 5.0};
        s.variable = SweepVar::xi;
        s.values = range(0.1, 0.9, 0.1);
        CaseSpec min_stream{"min_stream", 1, 0.0, CoarseMode::Fixed, 0.5,
                            {SignalPolicy::Proportional, AnPolicy::MinStream, std::nullopt}};
        CaseSpec eigen{"eigen_inverse", 1, 0.0, CoarseMode::Fixed, 0.5, adaptive_split(0.5)};
        s.cases = {min_stream, eigen};
        out.push_back(s);
    }

    {
        Scenario s;
        s.id = "fig6";
        s.description = "sum secrecy versus residual self-interference strength";
        s.variable = SweepVar::eta;
        s.values = range(0.0, 2.0, 0.25);
        s.cases = standard_cases();
        out.push_back(s);
    }

    {
        Scenario s;
        s.id = "fig7";
        s.description = "sum secrecy versus Eve x-location at y = 5";
        s.base.pos_eve = {0.0, 5.0};
        s.variable = SweepVar::eve_x;
        s.values = range(-5.0, 5.0, 1.0);
        s.cases = standard_cases();
        out.push_back(s);
    }

    {
        Scenario s;
        s.id = "fig8";
        s.description = "sum secrecy versus transmit SNR";
        s.variable = SweepVar::tx_power_db;
        s.values = range(0.0, 60.0, 5.0);
        s.cases = standard_cases();
        out.push_back(s);
    }
    return out;
}

inline Scenario find_scenario(const std::vector<Scenario> &cat, const std::string &id) {
    for (const auto &s : cat)
        if (s.id == id)
            return s;
    throw std::invalid_argument("unknown scenario '" + id + "'");
}

} // namespace fdwiretap::experiments

#endif
