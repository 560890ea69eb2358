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

#include <fdwiretap/approx.hpp>

#include <cmath>
#include <functional>
#include <limits>

using namespace fdwiretap;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ApproxParams fig2_params(int theta) {
    SystemConfig cfg;
    cfg.pos_eve = {0.5, 5.0};
    cfg.kappa_a = cfg.kappa_b = 0.1;
    cfg.theta = theta;
    return ApproxParams::from(cfg);
}

// Direct evaluation of the corollary, written out without the affine forms.
double direct_r_ba(const ApproxParams &p, double ga, double gb) {
    const double ps_a = ga * p.p_a;
    const double c = p.p_b * p.eta + p.theta * p.beta_ba * (1 - ga) * p.p_a + p.sd_ba * p.p_a + p.sigma2;
    (void)gb;
    return p.b * std::log2(1 + p.n_b * p.beta_ba * ps_a / (p.b * c));
}

double bisect(double lo, double hi, const std::function<double(double)> &f) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("coarse coefficients", "[approx]") {
    SystemConfig cfg;
    cfg.theta = 1;
    const auto c1 = coarse_coefficients(cfg);
    CHECK_THAT(c1.g_ba, WithinAbs(665.08, 0.01));
    CHECK_THAT(c1.a_ba, WithinRel(-std::pow(10.0, 2.5), 1e-12));
    cfg.theta = 0;
    const auto c0 = coarse_coefficients(cfg);
    CHECK(c0.a_ba == 0.0);
    CHECK(c0.a_ab == 0.0);
    CHECK(c0.a_e[0] <= 0.0);
    CHECK(c0.g_e >= cfg.sigma2);

    const auto ce = coarse_coefficients(ApproxParams::from(cfg).without_eve());
    CHECK(ce.a_e[0] == 0.0);
    CHECK(ce.a_e[1] == 0.0);
    CHECK(ce.g_e == cfg.sigma2);
}

TEST_CASE("approximate rates vanish without signal", "[approx]") {
    const auto r = ergodic_rate_approx(fig2_params(1), 0.0, 0.4);
    CHECK(r.r_ba == 0.0);
    CHECK(r.r_ea == 0.0);
    CHECK(r.r_ab > 0.0);
}

TEST_CASE("approximation matches a direct evaluation", "[approx]") {
    for (int theta : {0, 1}) {
        const auto p = fig2_params(theta);
        for (double ga : {0.1, 0.5, 1.0})
            CHECK_THAT(ergodic_rate_approx(p, ga, 0.3).r_ba, WithinRel(direct_r_ba(p, ga, 0.3), 1e-12));
    }
    // Full power on data: the AN term drops out of c_BA.
    const auto p = fig2_params(1);
    const double c = p.p_b * p.eta + p.sd_ba * p.p_a + p.sigma2;
    CHECK_THAT(ergodic_rate_approx(p, 1.0, 1.0).r_ba,
               WithinRel(p.b * std::log2(1 + p.n_b * p.beta_ba * p.p_a / (p.b * c)), 1e-12));
}

TEST_CASE("affine and direct interference forms agree", "[approx]") {
    for (int theta : {0, 1})
        for (double kappa : {0.0, 0.1, 2.0}) {
            auto p = fig2_params(theta);
            p.kappa_a = kappa;
            p.kappa_b = 0.5 * kappa;
            const auto c = coarse_coefficients(p);
            for (int i = 0; i <= 20; ++i)
                for (int j = 0; j <= 20; ++j) {
                    const Vec2 u{i / 20.0, j / 20.0};
                    const auto d = direct_interference(p, u[0], u[1]);
                    CHECK_THAT(c.c_ba(u), WithinRel(d.c_ba, 1e-12));
                    CHECK_THAT(c.c_ab(u), WithinRel(d.c_ab, 1e-12));
                    CHECK_THAT(c.c_e(u), WithinRel(d.c_e, 1e-12));
                }
        }
}

TEST_CASE("approximate rates are finite and nonnegative on the box", "[approx]") {
    const auto p = fig2_params(1);
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const auto r = ergodic_rate_approx(p, i / 20.0, j / 20.0);
            for (double x : {r.r_ba, r.r_ab, r.r_ea, r.r_eb}) {
                CHECK(std::isfinite(x));
                CHECK(x >= 0.0);
            }
        }
    CHECK_THROWS(ergodic_rate_approx(p, 1.1, 0.5));
}

TEST_CASE("no-Eve fractions", "[approx]") {
    SECTION("zero target needs no power") {
        const auto g = no_eve_gamma(fig2_params(1).without_eve(), 0.0, 0.0);
        CHECK(g.gamma_a == 0.0);
        CHECK(g.gamma_b == 0.0);
    }
    SECTION("known AN closed form") {
        const auto p = fig2_params(0).without_eve();
        const double t = 1.3, tbar = std::exp2(t / p.b);
        const auto g = no_eve_gamma(p, t, t);
        const auto c = coarse_coefficients(p);
        CHECK_THAT(g.gamma_a, WithinRel(c.g_ba * (tbar - 1) * p.b / (p.n_b * p.beta_ba * p.p_a), 1e-12));
    }
    SECTION("round trip and bisection oracle") {
        for (int theta : {0, 1}) {
            const auto p = fig2_params(theta).without_eve();
            for (double t : {0.2, 0.9, 1.7, 2.4}) {
                const auto g = no_eve_gamma(p, t, 0.5 * t);
                REQUIRE_FALSE(g.clamped_a);
                const auto r = ergodic_rate_approx(p, g.gamma_a, g.gamma_b);
                CHECK_THAT(r.r_ba, WithinAbs(t, 1e-9));
                CHECK_THAT(r.r_ab, WithinAbs(0.5 * t, 1e-9));
                const double oracle =
                    bisect(0.0, 1.0, [&](double x) { return ergodic_rate_approx(p, x, 0.0).r_ba - t; });
                CHECK_THAT(g.gamma_a, WithinAbs(oracle, 1e-6));
            }
        }
    }
    SECTION("unreachable targets clamp with a flag") {
        const auto g = no_eve_gamma(fig2_params(1).without_eve(), 50.0, 0.1);
        CHECK(g.clamped_a);
        CHECK(g.gamma_a == 1.0);
        CHECK_FALSE(g.clamped_b);
    }
    SECTION("vanishing gain is unachievable") {
        auto p = fig2_params(0).without_eve();
        p.beta_ba = 0.0;
        CHECK_THROWS_WITH(no_eve_gamma(p, 1.0, 0.0), Catch::Matchers::ContainsSubstring("target rate unachievable"));
    }
}

TEST_CASE("zero-secrecy boundary", "[approx]") {
    SECTION("no Eve is always secure") {
        const auto p = fig2_params(1).without_eve();
        const auto c = coarse_coefficients(p);
        for (double x : {0.0, 0.3, 1.0}) {
            const auto r = zero_secrecy_boundary(p, {x, 1 - x});
            CHECK_THAT(r[0], WithinRel(c.g_e * p.n_b * p.beta_ba * p.p_a / p.b, 1e-12));
            CHECK(r[0] > 0);
        }
    }
    SECTION("origin value") {
        const auto p = fig2_params(1);
        const auto c = coarse_coefficients(p);
        const double expect =
            c.g_e * p.n_b * p.beta_ba * p.p_a / p.b - c.g_ba * p.n_e * p.beta_ea * p.p_a / p.b;
        CHECK_THAT(zero_secrecy_boundary(p, {0, 0})[0], WithinRel(expect, 1e-12));
    }
    SECTION("sign agrees with the approximate secrecy") {
        for (int theta : {0, 1})
            for (Point2 eve : {Point2{0.5, 5.0}, Point2{1.0, 1.0}, Point2{0.2, 0.6}}) {
                SystemConfig cfg;
                cfg.pos_eve = eve;
                cfg.theta = theta;
                cfg.kappa_a = cfg.kappa_b = 0.1;
                const auto p = ApproxParams::from(cfg);
                for (int i = 1; i <= 20; ++i)
                    for (int j = 1; j <= 20; ++j) {
                        const Vec2 u{i / 20.0, j / 20.0};
                        const auto r = ergodic_rate_approx(p, u[0], u[1]);
                        const auto res = zero_secrecy_boundary(p, u);
                        if (std::abs(r.secrecy_a()) > 1e-9)
                            CHECK((res[0] > 0) == (r.secrecy_a() > 0));
                        if (std::abs(r.secrecy_b()) > 1e-9)
                            CHECK((res[1] > 0) == (r.secrecy_b() > 0));
                    }
            }
    }
}

TEST_CASE("quadratic secrecy constraints", "[approx]") {
    SECTION("zero target collapses to the boundary line") {
        const auto p = fig2_params(1);
        for (double x : {0.1, 0.5, 0.9}) {
            const Vec2 u{x, 1 - 0.5 * x};
            const auto q = quadratic_constraint_residual(p, u, 0, 0);
            const auto res = zero_secrecy_boundary(p, u);
            CHECK_THAT(q[0], WithinRel(u[0] * res[0], 1e-9));
            CHECK_THAT(q[1], WithinRel(u[1] * res[1], 1e-9));
        }
    }
    SECTION("sign agrees with the approximate secrecy margin") {
        for (int theta : {0, 1}) {
            SystemConfig cfg;
            cfg.pos_eve = {0.5, 5.0};
            cfg.theta = theta;
            cfg.kappa_a = cfg.kappa_b = 0.1;
            const auto p = ApproxParams::from(cfg);
            for (double t : {0.0, 0.2, 0.6})
                for (int i = 1; i <= 20; ++i)
                    for (int j = 1; j <= 20; ++j) {
                        const Vec2 u{i / 20.0, j / 20.0};
                        const auto r = ergodic_rate_approx(p, u[0], u[1]);
                        const auto q = quadratic_constraint_residual(p, u, t, t);
                        const double ma = r.secrecy_a() - t, mb = r.secrecy_b() - t;
                        if (std::abs(ma) > 1e-9)
                            CHECK((q[0] >= 0) == (ma >= 0));
                        if (std::abs(mb) > 1e-9)
                            CHECK((q[1] >= 0) == (mb >= 0));
                    }
        }
    }
    SECTION("no Eve reduces to the single-variable inequality") {
        const auto p = fig2_params(1).without_eve();
        const auto c = coarse_coefficients(p);
        const double t = 0.8, tbar = std::exp2(t / p.b);
        const Vec2 u{0.4, 0.7};
        const double expect = p.sigma2 * ((1 - tbar) * c.c_ba(u) + p.k_ba() * u[0]);
        CHECK_THAT(quadratic_constraint_residual(p, u, t, t)[0], WithinRel(expect, 1e-12));
    }
}

TEST_CASE("high-SNR limits", "[approx]") {
    SystemConfig cfg;
    cfg.kappa_a = cfg.kappa_b = 0.1;
    cfg.p_alice = cfg.p_bob = db_to_linear(60.0);
    const auto p = ApproxParams::from(cfg);
    const auto lim = high_snr_limits(p);
    const auto r = ergodic_rate_approx(p, 1.0, 1.0);
    CHECK_THAT(r.r_ba, WithinRel(lim.r_ba_limit, 0.01));
    CHECK_THAT(r.r_ea, WithinRel(lim.r_ea_limit, 0.01));
    CHECK_THAT(lim.r_ba_log_form, WithinRel(p.b * std::log2(p.n_b * p.beta_ba / (p.b * (p.eta + p.sd_ba))), 1e-12));
    CHECK_THAT(lim.r_ea_log_form,
               WithinRel(p.b * std::log2(p.n_e * p.beta_ea / (p.b * (p.beta_ea * 0.1 + p.beta_eb * 0.1))), 1e-12));

    auto more = p;
    more.n_e = 16;
    CHECK(high_snr_limits(more).r_ea_limit > lim.r_ea_limit);

    auto clean = p;
    clean.eta = 0.0;
    clean.sd_ba = 0.0;
    CHECK(high_snr_limits(clean).r_ba_limit == std::numeric_limits<double>::infinity());

    auto exact = p;
    exact.kappa_a = exact.kappa_b = 0.0;
    CHECK_THROWS_WITH(high_snr_limits(exact), Catch::Matchers::ContainsSubstring("Eve limit unbounded"));
}
