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

#ifndef FDWIRETAP_CONFIG_HPP
#define FDWIRETAP_CONFIG_HPP

#include "types.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdwiretap {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Large-scale attenuation r^(-alpha) between two points.
inline double path_loss(Point2 a, Point2 b, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("path_loss: alpha must be positive");
    const double r = std::hypot(a.x - b.x, a.y - b.y);
    if (r == 0.0)
        throw std::invalid_argument("path_loss: zero distance");
    return std::pow(r, -alpha);
}

/// Scalar parameters of one two-way full-duplex wiretap setup. Powers and
/// variances are linear; the defaults are the reference simulation layout
/// (Alice (0,0), Bob (0,1), Eve (1,1), alpha 3, 25 dB budgets, 4/4/8 antennas
/// carrying two streams).
struct SystemConfig {
    int n_alice = 4;
    int n_bob = 4;
    int n_eve = 8;
    int b = 2;

    Point2 pos_alice{0.0, 0.0};
    Point2 pos_bob{0.0, 1.0};
    Point2 pos_eve{1.0, 1.0};
    double alpha = 3.0;

    double p_alice = db_to_linear(25.0);
    double p_bob = db_to_linear(25.0);
    double sigma2 = 1.0;
    double eta = 1.0;
    double sigma2_delta_ba = 0.1;
    double sigma2_delta_ab = 0.1;

    int theta = 0;
    double kappa_a = 0.0;
    double kappa_b = 0.0;

    int trials = 100;
    std::uint64_t seed = 42;

    // Large-scale gains. Reciprocity makes beta_ab == beta_ba.
    double beta_ba() const { return path_loss(pos_alice, pos_bob, alpha); }
    double beta_ab() const { return beta_ba(); }
    double beta_ea() const { return path_loss(pos_alice, pos_eve, alpha); }
    double beta_eb() const { return path_loss(pos_bob, pos_eve, alpha); }

    int null_alice() const { return n_alice - b; }
    int null_bob() const { return n_bob - b; }
};

/// Throws std::invalid_argument naming the first violated constraint.
inline void validate(const SystemConfig &cfg) {
    auto fail = [](const std::string &what) {
        throw std::invalid_argument("invalid config: " + what);
    };
    if (cfg.b < 1) fail("b must be >= 1");
    if (cfg.n_alice < 2 * cfg.b) fail("n_alice must be >= 2b");
    if (cfg.n_bob < 2 * cfg.b) fail("n_bob must be >= 2b");
    if (cfg.n_eve < 1) fail("n_eve must be >= 1");
    if (!(cfg.alpha > 0.0)) fail("alpha must be positive");
    if (!(cfg.p_alice > 0.0) || !(cfg.p_bob > 0.0)) fail("power budgets must be positive");
    if (!(cfg.sigma2 > 0.0)) fail("sigma2 must be positive");
    if (!(cfg.eta >= 0.0)) fail("eta must be nonnegative");
    if (!(cfg.sigma2_delta_ba >= 0.0) || !(cfg.sigma2_delta_ab >= 0.0))
        fail("estimation error variances must be nonnegative");
    if (cfg.theta != 0 && cfg.theta != 1) fail("theta must be 0 or 1");
    const double kmax = 2.0 * cfg.b;
    if (!(cfg.kappa_a >= 0.0 && cfg.kappa_a <= kmax)) fail("kappa_a must lie in [0, 2b]");
    if (!(cfg.kappa_b >= 0.0 && cfg.kappa_b <= kmax)) fail("kappa_b must lie in [0, 2b]");
    if (cfg.trials < 1) fail("trials must be >= 1");
    // Coincident nodes surface here rather than deep inside a sweep.
    (void)cfg.beta_ba();
    (void)cfg.beta_ea();
    (void)cfg.beta_eb();
}

} // namespace fdwiretap

#endif
