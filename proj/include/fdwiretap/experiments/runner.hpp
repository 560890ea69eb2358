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

#ifndef FDWIRETAP_EXPERIMENTS_RUNNER_HPP
#define FDWIRETAP_EXPERIMENTS_RUNNER_HPP

#include "../approx.hpp"
#include "../channel.hpp"
#include "../coarse_alloc.hpp"
#include "../fine_alloc.hpp"
#include "../precoding.hpp"
#include "../rates.hpp"
#include "hd_baseline.hpp"
#include "scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace fdwiretap::experiments {

struct RunOptions {
    std::uint64_t seed = 42;
    std::optional<int> trials; // overrides the scenario's trial count
    unsigned threads = 1;      // 0 = hardware concurrency
    EveResidual eve_model = EveResidual::MismatchError;
};

struct ScenarioResult {
    std::vector<SweepRow> rows;
    std::vector<RegionRow> region;
};

/// Runs fn(i) for i in [0, n) on up to \p threads workers. Results must be
/// written to per-index slots; the call joins before returning.
template <class Fn>
void parallel_for(int n, unsigned threads, Fn &&fn) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1)));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++)
                fn(i);
        });
}

namespace detail {

struct CaseTrial {
    RateReport ibfd;
    RateReport hd;
    int fallbacks = 0;
    bool ok = false;
};

struct ResolvedRun {
    ResolvedCase rc;
    Vec2 gammas{1.0, 1.0};
    CoarseSolution coarse;
    bool optimized = false;
};

inline ResolvedRun resolve_run(const Scenario &sc, const CaseSpec &cs, double value) {
    ResolvedRun r;
    r.rc = resolve_case(sc, cs, value);
    if (r.rc.gammas) {
        r.gammas = *r.rc.gammas;
    } else {
        r.coarse = allocate_coarse(ApproxParams::from(r.rc.cfg));
        r.gammas = r.coarse.u;
        r.optimized = true;
    }
    return r;
}

inline SystemConfig hd_config(const Scenario &sc, SystemConfig cfg) {
    cfg.eta = 0.0;
    cfg.sigma2_delta_ba *= sc.hd_uncertainty_scale;
    cfg.sigma2_delta_ab *= sc.hd_uncertainty_scale;
    return cfg;
}

} // namespace detail

/// Monte Carlo sweep of one scenario. Trial t of every sweep value and every
/// case uses substream (seed, t), so curves are paired draw by draw. Output
/// is independent of the thread count.
inline ScenarioResult run_scenario(const Scenario &sc, const RunOptions &opts = {}) {
    validate(sc);
    const int trials = opts.trials.value_or(sc.base.trials);
    if (trials < 1)
        throw std::invalid_argument("run_scenario: trials must be >= 1");
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const std::size_t n_cases = sc.cases.size();

    ScenarioResult out;
    std::vector<std::vector<SweepRow>> per_case(n_cases);

    for (double value : sc.values) {
        std::vector<detail::ResolvedRun> runs;
        runs.reserve(n_cases);
        for (const auto &cs : sc.cases)
            runs.push_back(detail::resolve_run(sc, cs, value));

        const SystemConfig draw_cfg = apply_sweep(sc.base, sc.variable, value);
        std::vector<std::vector<detail::CaseTrial>> results(trials,
                                                            std::vector<detail::CaseTrial>(n_cases));

        parallel_for(trials, opts.threads, [&](int t) {
            auto rng = Rng::for_trial(opts.seed, static_cast<std::uint64_t>(t));
            const ChannelSet ch = sample_channel_set(draw_cfg, rng);
            std::optional<ChannelSet> ch_hd;
            if (sc.hd_baseline) {
                auto rng_hd = Rng::for_trial(opts.seed, static_cast<std::uint64_t>(t));
                ch_hd = sample_channel_set(detail::hd_config(sc, draw_cfg), rng_hd);
            }
            for (std::size_t c = 0; c < n_cases; ++c) {
                auto &slot = results[t][c];
                const auto &run = runs[c];
                const auto &cfg = run.rc.cfg;
                try {
                    const auto pre = build_precoder_set(ch, cfg.b, cfg.kappa_a, cfg.kappa_b);
                    const auto al = allocate_fine(cfg, ch.hhat_ba, ch.hhat_ab, pre, run.gammas[0],
                                                  run.gammas[1], run.rc.spec.fine);
                    slot.ibfd = compute_rates(ch, pre, al, cfg, opts.eve_model);
                    slot.fallbacks = al.fallbacks;
                    if (ch_hd) {
                        const auto hcfg = detail::hd_config(sc, cfg);
                        const auto pre_hd = build_precoder_set(*ch_hd, cfg.b, cfg.kappa_a, cfg.kappa_b);
                        const auto al_hd = allocate_fine(hcfg, ch_hd->hhat_ba, ch_hd->hhat_ab, pre_hd,
                                                         run.gammas[0], run.gammas[1], run.rc.spec.fine);
                        slot.hd = hd_baseline_rates(*ch_hd, pre_hd, al_hd, hcfg);
                    }
                    slot.ok = true;
                } catch (const std::exception &) {
                    slot.ok = false;
                }
            }
        });

        for (std::size_t c = 0; c < n_cases; ++c) {
            const auto &run = runs[c];
            SweepRow row;
            row.scenario = sc.id;
            row.case_id = sc.cases[c].id;
            row.variable = std::string(to_string(sc.variable));
            row.value = value;
            row.trials = trials;
            row.gamma_a = run.gammas[0];
            row.gamma_b = run.gammas[1];
            row.iterations = run.optimized ? run.coarse.iterations : 0;
            row.converged = run.optimized ? int(run.coarse.converged) : 1;
            const auto ap = ergodic_rate_approx(run.rc.cfg, run.gammas[0], run.gammas[1]);
            row.approx_r_ba = ap.r_ba;
            row.approx_r_ab = ap.r_ab;
            row.approx_r_ea = ap.r_ea;
            row.approx_r_eb = ap.r_eb;
            row.approx_sum_secrecy = ap.objective();

            RateReport acc, acc_hd;
            int ok = 0;
            for (int t = 0; t < trials; ++t) {
                const auto &s = results[t][c];
                if (!s.ok) {
                    ++row.failed;
                    continue;
                }
                ++ok;
                acc.r_ba += s.ibfd.r_ba;
                acc.r_ab += s.ibfd.r_ab;
                acc.r_ea += s.ibfd.r_ea;
                acc.r_eb += s.ibfd.r_eb;
                acc.r_sa += s.ibfd.r_sa;
                acc.r_sb += s.ibfd.r_sb;
                acc.sum_secrecy += s.ibfd.sum_secrecy;
                row.floored += s.ibfd.floored;
                row.fallbacks += s.fallbacks;
                acc_hd.r_ba += s.hd.r_ba;
                acc_hd.r_ab += s.hd.r_ab;
                acc_hd.r_ea += s.hd.r_ea;
                acc_hd.r_eb += s.hd.r_eb;
                acc_hd.sum_secrecy += s.hd.sum_secrecy;
            }
            const double inv = ok > 0 ? 1.0 / ok : nan;
            row.r_ba = acc.r_ba * inv;
            row.r_ab = acc.r_ab * inv;
            row.r_ea = acc.r_ea * inv;
            row.r_eb = acc.r_eb * inv;
            row.r_sa = acc.r_sa * inv;
            row.r_sb = acc.r_sb * inv;
            row.sum_secrecy = acc.sum_secrecy * inv;
            const double hd_inv = sc.hd_baseline ? inv : nan;
            row.hd_r_ba = acc_hd.r_ba * hd_inv;
            row.hd_r_ab = acc_hd.r_ab * hd_inv;
            row.hd_r_ea = acc_hd.r_ea * hd_inv;
            row.hd_r_eb = acc_hd.r_eb * hd_inv;
            row.hd_sum_secrecy = acc_hd.sum_secrecy * hd_inv;
            per_case[c].push_back(row);
        }
    }
    for (auto &rows : per_case)
        out.rows.insert(out.rows.end(), rows.begin(), rows.end());

    if (sc.region_grid_points >= 2) {
        const int n = sc.region_grid_points;
        for (const auto &cs : sc.cases) {
            const auto rc = resolve_case(sc, cs, sc.values.front());
            const auto p = ApproxParams::from(rc.cfg);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Vec2 u{double(i) / (n - 1), double(j) / (n - 1)};
                    const auto ap = ergodic_rate_approx(p, u[0], u[1]);
                    const auto res = zero_secrecy_boundary(p, u);
                    out.region.push_back({sc.id, cs.id, u[0], u[1], ap.objective(), ap.secrecy_a(),
                                          ap.secrecy_b(), res[0], res[1]});
                }
        }
    }
    return out;
}

} // namespace fdwiretap::experiments

#endif
