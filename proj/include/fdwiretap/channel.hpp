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

#ifndef FDWIRETAP_CHANNEL_HPP
#define FDWIRETAP_CHANNEL_HPP

#include "config.hpp"
#include "rng.hpp"
#include "types.hpp"

#include <cmath>
#include <stdexcept>

namespace fdwiretap {

/// Matrix with i.i.d. CN(0, variance) entries: real and imaginary parts are
/// independent N(0, variance/2). Entries are drawn column-major, real part
/// first, so the same substream always yields the same matrix.
inline CMatrix sample_cn(Rng &rng, Eigen::Index rows, Eigen::Index cols, double variance) {
    if (variance < 0.0)
        throw std::invalid_argument("sample_cn: negative variance");
    const double scale = std::sqrt(variance / 2.0);
    CMatrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            m(r, c) = cplx(scale * re, scale * im);
        }
    return m;
}

struct ChannelPair {
    CMatrix h;
    CMatrix hhat;
    // Set when the estimation error is at least as strong as the channel.
    bool noisy_estimate = false;
};

/// True channel with variance beta and its estimate hhat = h - delta, where
/// delta has i.i.d. CN(0, sigma2_delta) entries.
inline ChannelPair sample_channel_pair(Rng &rng, Eigen::Index rows, Eigen::Index cols,
                                       double beta, double sigma2_delta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("sample_channel_pair: beta must be positive");
    if (sigma2_delta < 0.0)
        throw std::invalid_argument("sample_channel_pair: negative error variance");
    ChannelPair out;
    out.h = sample_cn(rng, rows, cols, beta);
    const CMatrix delta = sample_cn(rng, rows, cols, sigma2_delta);
    out.hhat = out.h - delta;
    out.noisy_estimate = sigma2_delta >= beta;
    return out;
}

/// One Monte Carlo draw of every channel in the system.
struct ChannelSet {
    CMatrix h_ba;    // N_B x N_A
    CMatrix h_ab;    // N_A x N_B, exactly h_ba^H
    CMatrix h_ea;    // N_E x N_A
    CMatrix h_eb;    // N_E x N_B
    CMatrix hhat_ba; // Bob's estimate of h_ba
    CMatrix hhat_ab; // Alice's estimate of h_ab
    CMatrix g_a;     // residual self-interference at Alice, N_A x N_A
    CMatrix g_b;     // residual self-interference at Bob, N_B x N_B
    int noisy_estimates = 0;

    // [H_EA, H_EB]
    CMatrix h_e() const {
        CMatrix out(h_ea.rows(), h_ea.cols() + h_eb.cols());
        out << h_ea, h_eb;
        return out;
    }
};

/// Draws a full ChannelSet. Every matrix is generated as a unit-variance
/// draw scaled by the square root of its variance, in a fixed order
/// (h_ba, delta_ba, delta_ab, h_ea, h_eb, g_a, g_b). Configs that differ only
/// in positions, eta or error variances therefore see the same underlying
/// fading for a given substream.
inline ChannelSet sample_channel_set(const SystemConfig &cfg, Rng &rng) {
    validate(cfg);
    const Eigen::Index na = cfg.n_alice, nb = cfg.n_bob, ne = cfg.n_eve;

    const CMatrix w_ba = sample_cn(rng, nb, na, 1.0);
    const CMatrix w_dba = sample_cn(rng, nb, na, 1.0);
    const CMatrix w_dab = sample_cn(rng, na, nb, 1.0);
    const CMatrix w_ea = sample_cn(rng, ne, na, 1.0);
    const CMatrix w_eb = sample_cn(rng, ne, nb, 1.0);
    const CMatrix w_ga = sample_cn(rng, na, na, 1.0);
    const CMatrix w_gb = sample_cn(rng, nb, nb, 1.0);

    ChannelSet ch;
    const double beta_ba = cfg.beta_ba();
    ch.h_ba = std::sqrt(beta_ba) * w_ba;
    ch.h_ab = ch.h_ba.adjoint();
    ch.hhat_ba = ch.h_ba - std::sqrt(cfg.sigma2_delta_ba) * w_dba;
    ch.hhat_ab = ch.h_ab - std::sqrt(cfg.sigma2_delta_ab) * w_dab;
    ch.h_ea = std::sqrt(cfg.beta_ea()) * w_ea;
    ch.h_eb = std::sqrt(cfg.beta_eb()) * w_eb;
    ch.g_a = std::sqrt(cfg.eta) * w_ga;
    ch.g_b = std::sqrt(cfg.eta) * w_gb;
    ch.noisy_estimates = int(cfg.sigma2_delta_ba >= beta_ba) + int(cfg.sigma2_delta_ab >= beta_ba);
    return ch;
}

} // namespace fdwiretap

#endif
