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

#ifndef FDWIRETAP_COARSE_ALLOC_HPP
#define FDWIRETAP_COARSE_ALLOC_HPP

#include "approx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace fdwiretap {

using Mat2 = std::array<std::array<double, 2>, 2>;

/// Approximate sum secrecy f(u) = R_BA - R_EA + R_AB - R_EB over the signal
/// fractions u = (gamma_A, gamma_B). Not clamped per link.
inline double objective(const ApproxParams &p, const Vec2 &u) {
    return ergodic_rate_approx(p, u[0], u[1]).objective();
}

namespace detail {

// One approximate rate written as (b / ln 2) [ln(c + k u_idx) - ln c] with
// c = w . u + g affine in u.
struct RateTerm {
    Vec2 w;
    double g;
    double k;
    int idx;
    double sign;
};

inline std::array<RateTerm, 4> rate_terms(const ApproxParams &p) {
    const auto c = coarse_coefficients(p);
    return {{
        {{c.a_ba, 0.0}, c.g_ba, p.k_ba(), 0, +1.0},
        {c.a_e, c.g_e, p.k_ea(), 0, -1.0},
        {{0.0, c.a_ab}, c.g_ab, p.k_ab(), 1, +1.0},
        {c.a_e, c.g_e, p.k_eb(), 1, -1.0},
    }};
}

} // namespace detail

inline Vec2 objective_gradient(const ApproxParams &p, const Vec2 &u) {
    const double scale = p.b / std::numbers::ln2;
    Vec2 grad{0.0, 0.0};
    for (const auto &t : detail::rate_terms(p)) {
        const double c = dot(t.w, u) + t.g;
        const double d = c + t.k * u[t.idx];
        for (int i = 0; i < 2; ++i) {
            const double wd = t.w[i] + (i == t.idx ? t.k : 0.0);
            grad[i] += t.sign * scale * (wd / d - t.w[i] / c);
        }
    }
    return grad;
}

inline Mat2 objective_hessian(const ApproxParams &p, const Vec2 &u) {
    const double scale = p.b / std::numbers::ln2;
    Mat2 h{{{0.0, 0.0}, {0.0, 0.0}}};
    for (const auto &t : detail::rate_terms(p)) {
        const double c = dot(t.w, u) + t.g;
        const double d = c + t.k * u[t.idx];
        const Vec2 wd{t.w[0] + (t.idx == 0 ? t.k : 0.0), t.w[1] + (t.idx == 1 ? t.k : 0.0)};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                h[i][j] += t.sign * scale * (t.w[i] * t.w[j] / (c * c) - wd[i] * wd[j] / (d * d));
    }
    h[1][0] = h[0][1];
    return h;
}

enum class CoarseMethod { newton, gradient, grid };

inline const char *to_string(CoarseMethod m) {
    switch (m) {
    case CoarseMethod::newton: return "newton";
    case CoarseMethod::gradient: return "gradient";
    case CoarseMethod::grid: return "grid";
    }
    return "?";
}

struct CoarseSolution {
    Vec2 u{0.0, 0.0};
    double objective_value = 0.0;
    int iterations = 0;
    bool converged = false;
    // Step used last: newton if the final accepted step was a Newton step.
    CoarseMethod method = CoarseMethod::newton;
};

enum class MultiStart { Auto, Always, Never };

struct CoarseOptions {
    int max_iter = 50;
    double epsilon = 1e-6;
    Vec2 initial{0.5, 0.5};
    // Auto restarts from the four corners when theta = 1 or kappa > 0.
    MultiStart multistart = MultiStart::Auto;
};

namespace detail {

inline Vec2 clip_box(Vec2 u) {
    for (auto &x : u)
        x = std::clamp(x, 0.0, 1.0);
    return u;
}

// Coordinates that may move: not pinned at a bound by a gradient pointing out.
inline std::array<bool, 2> free_coordinates(const Vec2 &u, const Vec2 &g) {
    std::array<bool, 2> f{};
    for (int i = 0; i < 2; ++i)
        f[i] = !((u[i] <= 0.0 && g[i] < 0.0) || (u[i] >= 1.0 && g[i] > 0.0));
    return f;
}

inline double norm2(const Vec2 &v) { return std::hypot(v[0], v[1]); }

// Newton ascent direction on the free coordinates, if the reduced Hessian is
// negative definite there. Returns false otherwise.
inline bool newton_direction(const Mat2 &h, const Vec2 &g, const std::array<bool, 2> &free,
                             Vec2 &dir) {
    dir = {0.0, 0.0};
    if (free[0] && free[1]) {
        const double det = h[0][0] * h[1][1] - h[0][1] * h[0][1];
        if (!(h[0][0] < 0.0 && det > 0.0))
            return false;
        // -H^{-1} g
        dir[0] = -(h[1][1] * g[0] - h[0][1] * g[1]) / det;
        dir[1] = -(-h[0][1] * g[0] + h[0][0] * g[1]) / det;
        return true;
    }
    for (int i = 0; i < 2; ++i)
        if (free[i]) {
            if (!(h[i][i] < 0.0))
                return false;
            dir[i] = -g[i] / h[i][i];
        }
    return true;
}

inline CoarseSolution ascend_from(const ApproxParams &p, Vec2 u, const CoarseOptions &opts) {
    constexpr double armijo = 1e-4;
    constexpr int max_halvings = 30;
    CoarseSolution sol;
    u = clip_box(u);
    double fu = objective(p, u);
    for (int it = 0;; ++it) {
        const Vec2 g = objective_gradient(p, u);
        const auto free = free_coordinates(u, g);
        const Vec2 pg{free[0] ? g[0] : 0.0, free[1] ? g[1] : 0.0};
        if (norm2(pg) <= opts.epsilon) {
            sol.converged = true;
            break;
        }
        if (it >= opts.max_iter)
            break;

        Vec2 dir;
        bool newton = newton_direction(objective_hessian(p, u), g, free, dir);
        if (newton && !(dir[0] * g[0] + dir[1] * g[1] > 0.0))
            newton = false;
        if (!newton) {
            // Scaled so that a unit step moves the leading coordinate across the box.
            const double m = std::max(std::abs(pg[0]), std::abs(pg[1]));
            dir = {pg[0] / m, pg[1] / m};
        }

        bool accepted = false;
        double t = 1.0;
        for (int k = 0; k <= max_halvings; ++k, t *= 0.5) {
            const Vec2 cand = clip_box({u[0] + t * dir[0], u[1] + t * dir[1]});
            const double fc = objective(p, cand);
            const double gain = g[0] * (cand[0] - u[0]) + g[1] * (cand[1] - u[1]);
            if (fc >= fu + armijo * gain && (cand[0] != u[0] || cand[1] != u[1])) {
                u = cand;
                fu = fc;
                accepted = true;
                break;
            }
        }
        sol.iterations = it + 1;
        sol.method = newton ? CoarseMethod::newton : CoarseMethod::gradient;
        if (!accepted)
            break; // stalled; converged stays false
    }
    sol.u = u;
    sol.objective_value = fu;
    return sol;
}

inline bool better(const CoarseSolution &a, const CoarseSolution &b) {
    constexpr double tie = 1e-12;
    if (a.objective_value > b.objective_value + tie) return true;
    if (b.objective_value > a.objective_value + tie) return false;
    return a.u < b.u;
}

} // namespace detail

/// Maximizes the approximate sum secrecy over [0,1]^2. Newton ascent when the
/// reduced Hessian is negative definite, scaled projected gradient otherwise,
/// Armijo backtracking and box clipping on every step.
inline CoarseSolution allocate_coarse(const ApproxParams &p, const CoarseOptions &opts = {}) {
    std::vector<Vec2> starts{opts.initial};
    const bool multimodal = p.theta != 0.0 || p.kappa_a > 0.0 || p.kappa_b > 0.0;
    const bool multi = opts.multistart == MultiStart::Always ||
                       (opts.multistart == MultiStart::Auto && multimodal);
    if (multi)
        starts.insert(starts.end(), {{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}});

    CoarseSolution best;
    bool have = false;
    for (const auto &s : starts) {
        auto sol = detail::ascend_from(p, s, opts);
        if (!have || detail::better(sol, best)) {
            best = sol;
            have = true;
        }
    }
    return best;
}

/// Exhaustive n x n grid over [0,1]^2; the first maximizer in (gamma_A,
/// gamma_B) lexicographic order wins.
inline CoarseSolution grid_oracle(const ApproxParams &p, int n_points) {
    if (n_points < 2)
        throw std::invalid_argument("grid_oracle: need at least 2 points per axis");
    CoarseSolution best;
    best.method = CoarseMethod::grid;
    best.converged = true;
    bool have = false;
    for (int i = 0; i < n_points; ++i)
        for (int j = 0; j < n_points; ++j) {
            const Vec2 u{double(i) / (n_points - 1), double(j) / (n_points - 1)};
            const double f = objective(p, u);
            if (!have || f > best.objective_value) {
                best.u = u;
                best.objective_value = f;
                have = true;
            }
        }
    return best;
}

} // namespace fdwiretap

#endif
