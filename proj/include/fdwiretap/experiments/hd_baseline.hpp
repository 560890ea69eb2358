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

#ifndef FDWIRETAP_EXPERIMENTS_HD_BASELINE_HPP
#define FDWIRETAP_EXPERIMENTS_HD_BASELINE_HPP

#include "../rates.hpp"

namespace fdwiretap::experiments {

/// Half-duplex comparator: Alice and Bob take turns, so every rate carries a
/// factor 1/2, there is no self-interference, and Eve hears one transmitter
/// per slot. Artificial noise still follows theta.
inline RateReport hd_baseline_rates(const ChannelSet &ch, const PrecoderSet &pre,
                                    const PowerAllocation &al, const SystemConfig &cfg) {
    ChannelSet quiet = ch;
    quiet.g_a.setZero();
    quiet.g_b.setZero();

    RateReport r;
    r.r_ba = 0.5 * rate_legitimate(quiet, pre, al, cfg, Direction::BobToAlice);
    r.r_ab = 0.5 * rate_legitimate(quiet, pre, al, cfg, Direction::AliceToBob);

    auto eve_slot = [&](const CMatrix &h, const CMatrix &v, const CMatrix &v_null,
                        const CMatrix &vhat, const RVector &p_s, const RVector &p_w,
                        const RVector &p_wn) {
        const CMatrix dv = v - vhat;
        const CMatrix middle = an_covariance(v, v_null, p_w, p_wn) + dv * diag_matrix(p_s) * dv.adjoint();
        const Eigen::Index ne = h.rows();
        const auto c = floor_eigenvalues(
            h * middle * h.adjoint() + CMatrix::Identity(ne, ne) * cplx(cfg.sigma2, 0.0), cfg.sigma2);
        r.floored += c.floored;
        const CMatrix s = hermitian_part(h * vhat * diag_matrix(p_s) * vhat.adjoint() * h.adjoint());
        return 0.5 * logdet_identity_plus(s, c.c);
    };
    r.r_ea = eve_slot(ch.h_ea, pre.v_a, pre.v_a_null, pre.vhat_ae, al.p_s_a, al.p_w_a, al.p_wn_a);
    r.r_eb = eve_slot(ch.h_eb, pre.v_b, pre.v_b_null, pre.vhat_be, al.p_s_b, al.p_w_b, al.p_wn_b);

    const auto s = secrecy_rates(r.r_ba, r.r_ab, r.r_ea, r.r_eb);
    r.r_sa = s.r_sa;
    r.r_sb = s.r_sb;
    r.sum_secrecy = s.sum;
    return r;
}

} // namespace fdwiretap::experiments

#endif
