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

#ifndef FDWIRETAP_APPROX_HPP
#define FDWIRETAP_APPROX_HPP

#include "config.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdwiretap {

/// Large-scale inputs of the ergodic approximations. Built from a
/// SystemConfig; the Eve gains may be zeroed to model an absent eavesdropper.
struct ApproxParams {
    double n_a = 4, n_b = 4, n_e = 8, b = 2;
    double p_a = 0, p_b = 0;
    double sigma2 = 1, eta = 1;
    double sd_ba = 0, sd_ab = 0;
    double theta = 0;
    double kappa_a = 0, kappa_b = 0;
    double beta_ba = 1, beta_ab = 1, beta_ea = 0, beta_eb = 0;

    static ApproxParams from(const SystemConfig &cfg) {
        ApproxParams p;
        p.n_a = cfg.n_alice;
        p.n_b = cfg.n_bob;
        p.n_e = cfg.n_eve;
        p.b = cfg.b;
        p.p_a = cfg.p_alice;
        p.p_b = cfg.p_bob;
        p.sigma2 = cfg.sigma2;
        p.eta = cfg.eta;
        p.sd_ba = cfg.sigma2_delta_ba;
        p.sd_ab = cfg.sigma2_delta_ab;
        p.theta = cfg.theta;
        p.kappa_a = cfg.kappa_a;
        p.kappa_b = cfg.kappa_b;
        p.beta_ba = cfg.beta_ba();
        p.beta_ab = cfg.beta_ab();
        p.beta_ea = cfg.beta_ea();
        p.beta_eb = cfg.beta_eb();
        return p;
    }

    ApproxParams without_eve() const {
        ApproxParams p = *this;
        p.beta_ea = 0.0;
        p.beta_eb = 0.0;
        return p;
    }

    // Per-unit-fraction signal gains N_j beta_ji P_i / b.
    double k_ba() const { return n_b * beta_ba * p_a / b; }
    double k_ab() const { return n_a * beta_ab * p_b / b; }
    double k_ea() const { return n_e * beta_ea * p_a / b; }
    double k_eb() const { return n_e * beta_eb * p_b / b; }
};

using Vec2 = std::array<double, 2>;

inline double dot(const Vec2 &a, const Vec2 &u) { return a[0] * u[0] + a[1] * u[1]; }

/// Affine forms c_BA = a_ba*gamma_A + g_ba, c_AB = a_ab*gamma_B + g_ab,
/// c_E = a_e . u + g_e, with full budgets and aggregated noise (1-gamma)P.
struct CoarseCoefficients {
    double a_ba = 0, g_ba = 0;
    double a_ab = 0, g_ab = 0;
    Vec2 a_e{0, 0};
    double g_e = 0;

    double c_ba(const Vec2 &u) const { return a_ba * u[0] + g_ba; }
    double c_ab(const Vec2 &u) const { return a_ab * u[1] + g_ab; }
    double c_e(const Vec2 &u) const { return dot(a_e, u) + g_e; }
};

inline CoarseCoefficients coarse_coefficients(const ApproxParams &p) {
    CoarseCoefficients c;
    c.a_ba = -p.theta * p.beta_ba * p.p_a;
    c.g_ba = p.p_b * p.eta + p.theta * p.beta_ba * p.p_a + p.sd_ba * p.p_a + p.sigma2;
    c.a_ab = -p.theta * p.beta_ab * p.p_b;
    c.g_ab = p.p_a * p.eta + p.theta * p.beta_ab * p.p_b + p.sd_ab * p.p_b + p.sigma2;
    c.a_e = {p.beta_ea * (p.kappa_a - 1.0) * p.p_a, p.beta_eb * (p.kappa_b - 1.0) * p.p_b};
    c.g_e = p.beta_ea * p.p_a + p.beta_eb * p.p_b + p.sigma2;
    return c;
}

inline CoarseCoefficients coarse_coefficients(const SystemConfig &cfg) {
    return coarse_coefficients(ApproxParams::from(cfg));
}

/// The interference terms written out per power class, without the affine
/// rearrangement. Second route for the coefficient cross-checks.
struct DirectInterference {
    double c_ba, c_ab, c_e;
};

inline DirectInterference direct_interference(const ApproxParams &p, double gamma_a, double gamma_b) {
    const double ps_a = gamma_a * p.p_a, ps_b = gamma_b * p.p_b;
    const double an_a = (1.0 - gamma_a) * p.p_a, an_b = (1.0 - gamma_b) * p.p_b;
    const double tr_a = ps_a + an_a, tr_b = ps_b + an_b;
    DirectInterference d;
    d.c_ba = tr_b * p.eta + p.theta * p.beta_ba * an_a + p.sd_ba * tr_a + p.sigma2;
    d.c_ab = tr_a * p.eta + p.theta * p.beta_ab * an_b + p.sd_ab * tr_b + p.sigma2;
    d.c_e = p.beta_ea * (ps_a * p.kappa_a + an_a) + p.beta_eb * (ps_b * p.kappa_b + an_b) + p.sigma2;
    return d;
}

struct ApproxRates {
    double r_ba = 0, r_ab = 0, r_ea = 0, r_eb = 0;

    double secrecy_a() const { return r_ba - r_ea; }
    double secrecy_b() const { return r_ab - r_eb; }
    double objective() const { return secrecy_a() + secrecy_b(); }
    // Clamped per-link sum, comparable to the Monte Carlo secrecy sum.
    double clamped_sum() const {
        return std::max(0.0, secrecy_a()) + std::max(0.0, secrecy_b());
    }
};

namespace detail {
// b log2(1 + k gamma / c)
inline double stream_rate(double b, double k, double gamma, double c) {
    return b * std::log2(1.0 + k * gamma / c);
}
} // namespace detail

/// Ergodic approximations of the four rates at signal fractions (gamma_a, gamma_b).
inline ApproxRates ergodic_rate_approx(const ApproxParams &p, double gamma_a, double gamma_b) {
    if (!(gamma_a >= 0.0 && gamma_a <= 1.0 && gamma_b >= 0.0 && gamma_b <= 1.0))
        throw std::invalid_argument("ergodic_rate_approx: fractions must lie in [0, 1]");
    const auto c = coarse_coefficients(p);
    const Vec2 u{gamma_a, gamma_b};
    ApproxRates r;
    r.r_ba = detail::stream_rate(p.b, p.k_ba(), gamma_a, c.c_ba(u));
    r.r_ab = detail::stream_rate(p.b, p.k_ab(), gamma_b, c.c_ab(u));
    r.r_ea = detail::stream_rate(p.b, p.k_ea(), gamma_a, c.c_e(u));
    r.r_eb = detail::stream_rate(p.b, p.k_eb(), gamma_b, c.c_e(u));
    return r;
}

inline ApproxRates ergodic_rate_approx(const SystemConfig &cfg, double gamma_a, double gamma_b) {
    return ergodic_rate_approx(ApproxParams::from(cfg), gamma_a, gamma_b);
}

struct NoEveGamma {
    double gamma_a = 0, gamma_b = 0;
    bool clamped_a = false, clamped_b = false;
};

/// Signal fractions that reach target rates t_a, t_b (bits per channel use)
/// when no eavesdropper is present. Uses tbar = 2^(t / b).
inline NoEveGamma no_eve_gamma(const ApproxParams &p, double t_a, double t_b) {
    if (t_a < 0.0 || t_b < 0.0)
        throw std::invalid_argument("no_eve_gamma: target rates must be nonnegative");
    const auto c = coarse_coefficients(p);
    auto solve = [&](double t, double a, double g, double k, bool &clamped) {
        const double tbar = std::exp2(t / p.b);
        const double denom = a * (1.0 - tbar) + k;
        if (!(denom > 0.0))
            throw std::domain_error("no_eve_gamma: target rate unachievable");
        double gamma = g * (tbar - 1.0) / denom;
        if (gamma > 1.0) {
            gamma = 1.0;
            clamped = true;
        }
        return gamma;
    };
    NoEveGamma out;
    out.gamma_a = solve(t_a, c.a_ba, c.g_ba, p.k_ba(), out.clamped_a);
    out.gamma_b = solve(t_b, c.a_ab, c.g_ab, p.k_ab(), out.clamped_b);
    return out;
}

/// Linear residuals of the zero-secrecy boundary; res >= 0 iff the
/// approximate secrecy of that link is nonnegative at u.
inline Vec2 zero_secrecy_boundary(const ApproxParams &p, const Vec2 &u) {
    const auto c = coarse_coefficients(p);
    const double k1a = p.k_ba(), k2a = p.k_ea();
    const double k1b = p.k_ab(), k2b = p.k_eb();
    const double res_a = (c.a_e[0] * k1a - c.a_ba * k2a) * u[0] + c.a_e[1] * k1a * u[1] +
                         (c.g_e * k1a - c.g_ba * k2a);
    const double res_b = c.a_e[0] * k1b * u[0] + (c.a_e[1] * k1b - c.a_ab * k2b) * u[1] +
                         (c.g_e * k1b - c.g_ab * k2b);
    return {res_a, res_b};
}

/// Bivariate quadratic u^T Q u + l^T u + r for the constraint
/// R_ji - R_Ei >= t_i.
struct QuadraticForm {
    double q00 = 0, q01 = 0, q11 = 0;
    Vec2 l{0, 0};
    double r = 0;

    double operator()(const Vec2 &u) const {
        return q00 * u[0] * u[0] + 2.0 * q01 * u[0] * u[1] + q11 * u[1] * u[1] + dot(l, u) + r;
    }
};

/// Builds the quadratic for link A (\p link == 0) or link B (\p link == 1).
inline QuadraticForm quadratic_constraint(const ApproxParams &p, int link, double t) {
    const auto c = coarse_coefficients(p);
    const double tbar = std::exp2(t / p.b);
    const int k = link;
    const double a_leg = link == 0 ? c.a_ba : c.a_ab;
    const double g_leg = link == 0 ? c.g_ba : c.g_ab;
    const double k_leg = link == 0 ? p.k_ba() : p.k_ab();
    const double k_eve = link == 0 ? p.k_ea() : p.k_eb();

    // Q = (a_e e_k^T + e_k a_e^T)/2 * (a_leg (1 - tbar) + k_leg) - tbar a_leg k_eve e_k e_k^T
    double q[2][2] = {{0, 0}, {0, 0}};
    const double s = a_leg * (1.0 - tbar) + k_leg;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double sym = 0.5 * (c.a_e[i] * (j == k) + (i == k) * c.a_e[j]);
            q[i][j] = sym * s - (i == k && j == k ? tbar * a_leg * k_eve : 0.0);
        }
    QuadraticForm f;
    f.q00 = q[0][0];
    f.q01 = q[0][1];
    f.q11 = q[1][1];
    // l = (a_e g_leg + e_k a_leg g_e)(1 - tbar) + e_k g_e k_leg - e_k tbar g_leg k_eve
    for (int i = 0; i < 2; ++i) {
        f.l[i] = c.a_e[i] * g_leg * (1.0 - tbar);
        if (i == k)
            f.l[i] += a_leg * c.g_e * (1.0 - tbar) + c.g_e * k_leg - tbar * g_leg * k_eve;
    }
    f.r = g_leg * c.g_e * (1.0 - tbar);
    return f;
}

/// Residuals of both quadratic constraints at u; q >= 0 iff the constraint holds.
inline Vec2 quadratic_constraint_residual(const ApproxParams &p, const Vec2 &u, double t_a,
                                          double t_b) {
    return {quadratic_constraint(p, 0, t_a)(u), quadratic_constraint(p, 1, t_b)(u)};
}

struct HighSnrLimits {
    // P -> infinity limits of the approximate rates at gamma = 1.
    double r_ba_limit = 0;
    double r_ea_limit = 0;
    // Same limits with the unit term of log2(1 + x) dropped.
    double r_ba_log_form = 0;
    double r_ea_log_form = 0;
};

/// High-power limits of the approximate rates with all power on the data
/// (gamma = 1), both budgets growing at the fixed ratio P_B / P_A. Returns
/// +infinity for the legitimate limit when the link has no residual impairment.
inline HighSnrLimits high_snr_limits(const ApproxParams &p) {
    const double ratio = p.p_b / p.p_a;
    const double eve_floor = p.beta_ea * p.kappa_a + p.beta_eb * p.kappa_b * ratio;
    if (!(eve_floor > 0.0))
        throw std::domain_error("high_snr_limits: Eve limit unbounded");
    constexpr double inf = std::numeric_limits<double>::infinity();
    HighSnrLimits h;
    const double impair = p.eta * ratio + p.sd_ba;
    const double x_ea = p.n_e * p.beta_ea / (p.b * eve_floor);
    h.r_ea_limit = p.b * std::log2(1.0 + x_ea);
    h.r_ea_log_form = p.b * std::log2(x_ea);
    if (impair > 0.0) {
        const double x_ba = p.n_b * p.beta_ba / (p.b * impair);
        h.r_ba_limit = p.b * std::log2(1.0 + x_ba);
        h.r_ba_log_form = p.b * std::log2(x_ba);
    } else {
        h.r_ba_limit = inf;
        h.r_ba_log_form = inf;
    }
    return h;
}

} // namespace fdwiretap

#endif
