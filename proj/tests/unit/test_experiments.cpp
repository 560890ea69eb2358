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

#include <catch_amalgamated.hpp>

#include <fdwiretap/fdwiretap.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace fdwiretap;
using namespace fdwiretap::experiments;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Scenario tiny_scenario() {
    Scenario s;
    s.id = "tiny";
    s.variable = SweepVar::eta;
    s.values = {0.0, 1.0};
    s.cases = {{"fixed", 0, 0.0, CoarseMode::Fixed, 0.8, {}},
               {"opt", 1, 0.1, CoarseMode::Algorithm, 1.0, {SignalPolicy::Proportional, AnPolicy::EigenInverse, 0.9}}};
    s.base.trials = 6;
    return s;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("fdwiretap_test_" + name)).string();
}

} // namespace

TEST_CASE("HD legitimate rate is half the interference-free IBFD rate", "[experiments]") {
    SystemConfig cfg;
    cfg.eta = 0.0;
    auto rng = Rng::for_trial(3, 0);
    const auto ch = sample_channel_set(cfg, rng);
    const auto pre = build_precoder_set(ch, cfg.b, 0.0, 0.0);
    const auto al = equal_allocation(cfg, 1.0, 1.0);
    const auto hd = hd_baseline_rates(ch, pre, al, cfg);
    const auto fd = compute_rates(ch, pre, al, cfg);
    CHECK_THAT(hd.r_ba, WithinRel(0.5 * fd.r_ba, 1e-12));
    CHECK_THAT(hd.r_ab, WithinRel(0.5 * fd.r_ab, 1e-12));
}

TEST_CASE("HD rates ignore residual self-interference", "[experiments]") {
    SystemConfig lo, hi;
    lo.eta = 0.0;
    hi.eta = 2.0;
    auto r1 = Rng::for_trial(3, 1), r2 = Rng::for_trial(3, 1);
    const auto c1 = sample_channel_set(lo, r1), c2 = sample_channel_set(hi, r2);
    const auto pre = build_precoder_set(c1, 2, 0.1, 0.1);
    const auto al = equal_allocation(lo, 0.6, 0.6);
    const auto a = hd_baseline_rates(c1, pre, al, lo), b = hd_baseline_rates(c2, pre, al, hi);
    CHECK(a.r_ba == b.r_ba);
    CHECK(a.r_ea == b.r_ea);
    CHECK(a.sum_secrecy == b.sum_secrecy);
}

TEST_CASE("HD Eve hears each transmitter alone", "[experiments]") {
    SystemConfig cfg;
    cfg.eta = 0.0;
    auto rng = Rng::for_trial(4, 0);
    const auto ch = sample_channel_set(cfg, rng);
    const auto pre = build_precoder_set(ch, 2, 0.0, 0.0);
    const auto al = equal_allocation(cfg, 1.0, 1.0);
    const auto hd = hd_baseline_rates(ch, pre, al, cfg);
    // No AN and a known precoder: Eve's slot rate is a plain MIMO rate.
    const CMatrix s = ch.h_ea * pre.vhat_ae * diag_matrix(al.p_s_a) * pre.vhat_ae.adjoint() * ch.h_ea.adjoint();
    CHECK_THAT(hd.r_ea, WithinRel(0.5 * logdet_identity_plus(s, CMatrix::Identity(8, 8)), 1e-12));
}

TEST_CASE("sweep application", "[experiments]") {
    SystemConfig cfg;
    CHECK(apply_sweep(cfg, SweepVar::eve_x, -2.0).pos_eve.x == -2.0);
    CHECK(apply_sweep(cfg, SweepVar::eta, 0.25).eta == 0.25);
    CHECK_THAT(apply_sweep(cfg, SweepVar::tx_power_db, 30.0).p_bob, WithinRel(1000.0, 1e-12));
    CHECK(apply_sweep(cfg, SweepVar::kappa, 0.5).kappa_a == 0.5);
    CHECK(parse_sweep_var("power_fraction") == SweepVar::power_fraction);
    CHECK_THROWS(parse_sweep_var("snr"));
}

TEST_CASE("case resolution", "[experiments]") {
    Scenario s = tiny_scenario();
    const auto fixed = resolve_case(s, s.cases[0], 1.0);
    REQUIRE(fixed.gammas);
    CHECK(*fixed.gammas == Vec2{0.8, 0.8});
    CHECK(fixed.cfg.eta == 1.0);
    CHECK_FALSE(resolve_case(s, s.cases[1], 0.0).gammas);

    CaseSpec unk{"u", 0, 0.1, CoarseMode::UnknownEve, 0.3, {}};
    CHECK(*resolve_case(s, unk, 0.0).gammas == Vec2{1.0, 1.0});

    s.variable = SweepVar::power_fraction;
    s.target = FractionTarget::alice;
    s.values = {0.2};
    CaseSpec half{"h", 0, 0.1, CoarseMode::Fixed, 0.5, {}};
    CHECK(*resolve_case(s, half, 0.2).gammas == Vec2{0.2, 0.5});
    s.target = FractionTarget::both;
    CHECK(*resolve_case(s, half, 0.2).gammas == Vec2{0.2, 0.2});

    s.variable = SweepVar::xi;
    CHECK(*resolve_case(s, half, 0.3).spec.fine.xi == 0.3);
}

TEST_CASE("scenario validation", "[experiments]") {
    auto s = tiny_scenario();
    CHECK_NOTHROW(validate(s));
    auto bad = s;
    bad.values = {};
    CHECK_THROWS_WITH(validate(bad), ContainsSubstring("empty"));
    bad = s;
    bad.values = {1.0, 0.0};
    CHECK_THROWS_WITH(validate(bad), ContainsSubstring("sorted"));
    bad = s;
    bad.cases[1].id = "fixed";
    CHECK_THROWS_WITH(validate(bad), ContainsSubstring("duplicate"));
    bad = s;
    bad.id = "a,b";
    CHECK_THROWS(validate(bad));
    bad = s;
    bad.variable = SweepVar::kappa;
    bad.values = {5.0};
    CHECK_THROWS(validate(bad));
}

TEST_CASE("catalog covers every figure and validates", "[experiments]") {
    const auto cat = builtin_catalog();
    std::vector<std::string> ids;
    for (const auto &s : cat) {
        CHECK_NOTHROW(validate(s));
        ids.push_back(s.id);
    }
    CHECK(ids == std::vector<std::string>{"fig2a", "fig2b", "fig3", "fig4a", "fig4b", "fig5", "fig6", "fig7", "fig8"});
    const auto fig7 = find_scenario(cat, "fig7");
    std::set<std::string> cases;
    for (const auto &c : fig7.cases)
        cases.insert(c.id);
    CHECK(cases.size() == 7);
    CHECK(find_scenario(cat, "fig4b").hd_uncertainty_scale == 1.5);
    CHECK_THROWS(find_scenario(cat, "fig9"));
}

TEST_CASE("CSV output", "[experiments]") {
    SECTION("empty list gives a header-only file") {
        const std::string path = temp_path("empty.csv");
        emit_csv({}, path);
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(ss.str() == std::string(kSweepHeader) + "\n");
        CHECK(parse_csv(path).empty());
    }
    SECTION("round trip and constant column count") {
        const auto res = run_scenario(tiny_scenario(), {7, 2, 1});
        const std::string text = format_csv(res.rows);
        std::istringstream in(text);
        std::string line;
        std::set<std::size_t> widths;
        while (std::getline(in, line))
            widths.insert(std::count(line.begin(), line.end(), ',') + 1);
        CHECK(widths == std::set<std::size_t>{29});
        CHECK(text.back() == '\n');

        const auto back = parse_csv_text(text);
        REQUIRE(back.size() == res.rows.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            CHECK(back[i].case_id == res.rows[i].case_id);
            CHECK_THAT(back[i].sum_secrecy, WithinRel(res.rows[i].sum_secrecy, 1e-8));
            CHECK_THAT(back[i].gamma_a, WithinRel(res.rows[i].gamma_a, 1e-8));
            CHECK(back[i].trials == res.rows[i].trials);
            CHECK(std::isnan(back[i].hd_r_ba));
        }
        CHECK(format_csv(back) == text);
    }
    SECTION("I/O failures name the path") {
        CHECK_THROWS_WITH(emit_csv({}, "/nonexistent_dir/x.csv"), ContainsSubstring("/nonexistent_dir/x.csv"));
        CHECK_THROWS_WITH(parse_csv("/nonexistent_dir/y.csv"), ContainsSubstring("/nonexistent_dir/y.csv"));
    }
}

TEST_CASE("runner rows", "[experiments]") {
    const auto s = tiny_scenario();
    const auto res = run_scenario(s, {42, std::nullopt, 1});
    REQUIRE(res.rows.size() == 4);
    CHECK(res.rows[0].case_id == "fixed");
    CHECK(res.rows[1].case_id == "fixed");
    CHECK(res.rows[1].value == 1.0);
    for (const auto &r : res.rows) {
        CHECK(r.trials == 6);
        CHECK(r.failed == 0);
        CHECK(r.sum_secrecy >= 0.0);
        CHECK(r.scenario == "tiny");
        CHECK(r.variable == "eta");
    }
    CHECK(res.rows[0].gamma_a == 0.8);
    CHECK(res.rows[0].converged == 1);
}

TEST_CASE("runner means equal a hand-rolled loop", "[experiments]") {
    auto s = tiny_scenario();
    s.cases.resize(1);
    s.values = {0.5};
    const auto res = run_scenario(s, {11, 5, 1});
    auto cfg = resolve_case(s, s.cases[0], 0.5).cfg;
    double sum = 0.0, r_ea = 0.0;
    for (std::uint64_t t = 0; t < 5; ++t) {
        auto rng = Rng::for_trial(11, t);
        const auto ch = sample_channel_set(cfg, rng);
        const auto pre = build_precoder_set(ch, cfg.b, 0.0, 0.0);
        const auto al = allocate_fine(cfg, ch.hhat_ba, ch.hhat_ab, pre, 0.8, 0.8, {});
        const auto r = compute_rates(ch, pre, al, cfg);
        sum += r.sum_secrecy;
        r_ea += r.r_ea;
    }
    CHECK_THAT(res.rows[0].sum_secrecy, WithinRel(sum / 5, 1e-12));
    CHECK_THAT(res.rows[0].r_ea, WithinRel(r_ea / 5, 1e-12));
}

TEST_CASE("runner is deterministic and thread-count independent", "[experiments]") {
    const auto s = find_scenario(builtin_catalog(), "fig7");
    const auto a = format_csv(run_scenario(s, {42, 3, 1}).rows);
    const auto b = format_csv(run_scenario(s, {42, 3, 4}).rows);
    const auto c = format_csv(run_scenario(s, {42, 3, 1}).rows);
    const auto d = format_csv(run_scenario(s, {43, 3, 1}).rows);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a != d);

    auto one = tiny_scenario();
    CHECK(format_csv(run_scenario(one, {5, 1, 1}).rows) == format_csv(run_scenario(one, {5, 1, 2}).rows));
}

TEST_CASE("HD columns are filled only for HD scenarios", "[experiments]") {
    auto s = find_scenario(builtin_catalog(), "fig4a");
    s.values = {0.5};
    const auto res = run_scenario(s, {1, 3, 1});
    for (const auto &r : res.rows) {
        CHECK(std::isfinite(r.hd_sum_secrecy));
        CHECK(r.hd_r_ba > 0.0);
    }
}

TEST_CASE("region grid export", "[experiments]") {
    auto s = find_scenario(builtin_catalog(), "fig3");
    s.region_grid_points = 5;
    const auto res = run_scenario(s, {1, 1, 1});
    REQUIRE(res.region.size() == 2 * 25);
    const auto p = ApproxParams::from(resolve_case(s, s.cases[1], s.values[0]).cfg);
    const auto &row = res.region[25 + 7];
    CHECK(row.case_id == "theta1");
    CHECK_THAT(row.objective, WithinAbs(objective(p, {row.gamma_a, row.gamma_b}), 1e-12));
    CHECK(format_region_csv(res.region).rfind(kRegionHeader, 0) == 0);
}

TEST_CASE("scenario file parsing", "[experiments]") {
    const std::string good = R"({"scenarios": [{
        "id": "s1",
        "system": {"eve": [0.5, 5], "tx_power_db": 20, "eta": 0.5, "trials": 4},
        "sweep": {"variable": "eve_x", "from": -1, "to": 1, "step": 0.5},
        "cases": [{"id": "a", "coarse": "fixed", "gamma": 0.7},
                  {"id": "b", "theta": 1, "kappa": 0.1,
                   "fine": {"signal": "proportional", "an": "eigen_inverse", "xi": 0.9}}]
    }]})";
    const auto list = parse_scenarios(good);
    REQUIRE(list.size() == 1);
    const auto &s = list[0];
    CHECK(s.values == std::vector<double>{-1, -0.5, 0, 0.5, 1});
    CHECK(s.base.pos_eve.y == 5.0);
    CHECK_THAT(s.base.p_alice, WithinRel(100.0, 1e-12));
    CHECK(s.base.trials == 4);
    CHECK(s.cases[0].coarse == CoarseMode::Fixed);
    CHECK(s.cases[1].fine.an == AnPolicy::EigenInverse);
    CHECK(*s.cases[1].fine.xi == 0.9);

    CHECK_THROWS_AS(parse_scenarios("{not json"), ConfigError);
    CHECK_THROWS_WITH(parse_scenarios(R"({"scenarios": [{"id": "x", "sweep": {"variable": "bogus", "values": [1]}, "cases": [{"id": "a"}]}]})"),
                      ContainsSubstring("bogus"));
    CHECK_THROWS_WITH(parse_scenarios(R"({"scenarios": [{"id": "x", "typo": 1, "sweep": {"variable": "eta", "values": [1]}, "cases": [{"id": "a"}]}]})"),
                      ContainsSubstring("typo"));
    CHECK_THROWS_WITH(parse_scenarios(R"({"scenarios": [{"id": "x", "sweep": {"variable": "eta", "values": [2, 1]}, "cases": [{"id": "a"}]}]})"),
                      ContainsSubstring("sorted"));
    CHECK_THROWS_WITH(parse_scenarios(R"({"scenarios": [{"id": "x", "sweep": {"variable": "eta", "values": [1]}, "cases": [{"id": "a", "coarse": "fixed"}]}]})"),
                      ContainsSubstring("gamma"));
    CHECK_THROWS_AS(load_scenarios("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("high power with fixed unit gamma and exact Eve precoder leaks everything", "[experiments]") {
    auto s = find_scenario(builtin_catalog(), "fig8");
    s.values = {60.0};
    for (const auto &r : run_scenario(s, {42, 20, 0}).rows)
        if (r.case_id == "unknown_k0")
            CHECK(r.sum_secrecy < 0.05);
}

TEST_CASE("IBFD with known AN beats half duplex", "[experiments]") {
    for (const char *id : {"fig4a", "fig4b"}) {
        const auto res = run_scenario(find_scenario(builtin_catalog(), id), {42, 50, 0});
        for (const auto &r : res.rows)
            if (r.case_id == "theta0")
                CHECK(r.sum_secrecy >= r.hd_sum_secrecy);
    }
}
