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

#ifndef FDWIRETAP_RATES_HPP
#define FDWIRETAP_RATES_HPP

#include "channel.hpp"
#include "config.hpp"
#include "precoding.hpp"
#include "types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fdwiretap {

/// Diagonal power loads of both transmitters. p_s and p_w have b entries,
/// p_wn has N - b entries (null-space artificial noise).
struct PowerAllocation {
    RVector p_s_a, p_w_a, p_wn_a;
    RVector p_s_b, p_w_b, p_wn_b;
    double gamma_a = 1.0, gamma_b = 1.0;
    double xi_a = 0.5, xi_b = 0.5;
    // Number of fallbacks taken by the fine allocators (zero-trace Gram,
    // floored eigenvalues).
    int fallbacks = 0;

    double total_a() const { return p_s_a.sum() + p_w_a.sum() + p_wn_a.sum(); }
    double total_b() const { return p_s_b.sum() + p_w_b.sum() + p_wn_b.sum(); }
};

struct RateReport {
    double r_ba = 0.0, r_ab = 0.0; // legitimate rates, bits per channel use
    double r_ea = 0.0, r_eb = 0.0; // Eve's rates for Alice's and Bob's data
    double r_sa = 0.0, r_sb = 0.0; // secrecy rates
    double sum_secrecy = 0.0;
    int floored = 0;               // Eve covariances that needed eigenvalue flooring
};

/// How Eve's residual signal after subtracting her own precoder estimate is
/// modelled in C_E.
enum class EveResidual {
    // The mismatch part (V - Vhat) P_s (V - Vhat)^H acts as interference.
    // Always PSD; coincides with the literal form whenever kappa = 0.
    MismatchError,
    // T_E - Vhat P_s Vhat^H taken verbatim. Indefinite for most kappa > 0
    // draws, in which case eigenvalue flooring kicks in.
    Literal,
};

/// log2 det(I + S C^{-1}) = log2 det(C + S) - log2 det(C), both through
/// Cholesky factors.
inline double logdet_identity_plus(const CMatrix &s, const CMatrix &c) {
    auto log2det = [](const CMatrix &m) {
        Eigen::LLT<CMatrix> llt(hermitian_part(m));
        if (llt.info() != Eigen::Success)
            throw std::domain_error("logdet_identity_plus: covariance not PD");
        const auto &l = llt.matrixLLT();
        double acc = 0.0;
        for (Eigen::Index i = 0; i < l.rows(); ++i) {
            const double d = l(i, i).real();
            if (!(d > 0.0))
                throw std::domain_error("logdet_identity_plus: covariance not PD");
            acc += std::log2(d);
        }
        return 2.0 * acc;
    };
    if (s.rows() != c.rows() || s.cols() != c.cols() || c.rows() != c.cols())
        throw std::invalid_argument("logdet_identity_plus: shape mismatch");
    const double base = log2det(c);
    const double full = log2det(c + s);
    return std::max(0.0, full - base);
}

/// T = V diag(p_s + p_w) V^H + Vnull diag(p_wn) Vnull^H.
inline CMatrix transmit_covariance(const CMatrix &v, const CMatrix &v_null, const RVector &p_s,
                                   const RVector &p_w, const RVector &p_wn) {
    return v * diag_matrix(p_s + p_w) * v.adjoint() + v_null * diag_matrix(p_wn) * v_null.adjoint();
}

/// Artificial-noise part of T only.
inline CMatrix an_covariance(const CMatrix &v, const CMatrix &v_null, const RVector &p_w,
                             const RVector &p_wn) {
    return v * diag_matrix(p_w) * v.adjoint() + v_null * diag_matrix(p_wn) * v_null.adjoint();
}

inline CMatrix transmit_covariance_a(const PrecoderSet &pre, const PowerAllocation &al) {
    return transmit_covariance(pre.v_a, pre.v_a_null, al.p_s_a, al.p_w_a, al.p_wn_a);
}
inline CMatrix transmit_covariance_b(const PrecoderSet &pre, const PowerAllocation &al) {
    return transmit_covariance(pre.v_b, pre.v_b_null, al.p_s_b, al.p_w_b, al.p_wn_b);
}

namespace detail {

inline void check_allocation_shapes(const PrecoderSet &pre, const PowerAllocation &al) {
    const auto b = pre.v_a.cols();
    if (al.p_s_a.size() != b || al.p_w_a.size() != b || al.p_s_b.size() != pre.v_b.cols() ||
        al.p_w_b.size() != pre.v_b.cols() || al.p_wn_a.size() != pre.v_a_null.cols() ||
        al.p_wn_b.size() != pre.v_b_null.cols())
        throw std::invalid_argument("power allocation does not match precoder shapes");
}

struct LegitimateTerms {
    CMatrix signal;
    CMatrix cov;
};

inline LegitimateTerms legitimate_terms(const ChannelSet &ch, const PrecoderSet &pre,
                                        const PowerAllocation &al, const SystemConfig &cfg,
                                        Direction dir) {
    check_allocation_shapes(pre, al);
    const bool at_bob = dir == Direction::BobToAlice;
    const CMatrix &hhat = at_bob ? ch.hhat_ba : ch.hhat_ab;
    const CMatrix &g_rx = at_bob ? ch.g_b : ch.g_a;
    const CMatrix &v_tx = at_bob ? pre.v_a : pre.v_b;
    const CMatrix &v_tx_null = at_bob ? pre.v_a_null : pre.v_b_null;
    const RVector &p_s = at_bob ? al.p_s_a : al.p_s_b;
    const RVector &p_w = at_bob ? al.p_w_a : al.p_w_b;
    const RVector &p_wn = at_bob ? al.p_wn_a : al.p_wn_b;
    const double sd2 = at_bob ? cfg.sigma2_delta_ba : cfg.sigma2_delta_ab;
    const double p_tx = at_bob ? cfg.p_alice : cfg.p_bob;
    const CMatrix t_rx = at_bob ? transmit_covariance_b(pre, al) : transmit_covariance_a(pre, al);

    const Eigen::Index n = hhat.rows();
    LegitimateTerms out;
    out.cov = g_rx * t_rx * g_rx.adjoint();
    if (cfg.theta == 1)
        out.cov += hhat * an_covariance(v_tx, v_tx_null, p_w, p_wn) * hhat.adjoint();
    out.cov += CMatrix::Identity(n, n) * cplx(sd2 * p_tx + cfg.sigma2, 0.0);
    out.cov = hermitian_part(out.cov);
    out.signal = hermitian_part(hhat * v_tx * diag_matrix(p_s) * v_tx.adjoint() * hhat.adjoint());
    return out;
}

} // namespace detail

/// Interference-plus-noise covariance at the receiver of \p dir: residual
/// self-interference, the peer's artificial noise when it is unknown
/// (theta = 1), and the estimation-error inflation sigma2_delta * P + sigma2.
inline CMatrix covariance_legitimate(const ChannelSet &ch, const PrecoderSet &pre,
                                     const PowerAllocation &al, const SystemConfig &cfg,
                                     Direction dir) {
    return detail::legitimate_terms(ch, pre, al, cfg, dir).cov;
}

inline double rate_legitimate(const ChannelSet &ch, const PrecoderSet &pre,
                              const PowerAllocation &al, const SystemConfig &cfg, Direction dir) {
    const auto t = detail::legitimate_terms(ch, pre, al, cfg, dir);
    return logdet_identity_plus(t.signal, t.cov);
}

struct EveCovariance {
    CMatrix c;
    bool floored = false;
};

/// Raises eigenvalues of a Hermitian matrix below 1e-12 * tr/N to that floor.
inline EveCovariance floor_eigenvalues(const CMatrix &c, double sigma2) {
    EveCovariance out{hermitian_part(c), false};
    const double n = static_cast<double>(c.rows());
    const double floor_level = 1e-12 * std::max(out.c.trace().real() / n, sigma2);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(out.c);
    const RVector ev = es.eigenvalues();
    if (ev.minCoeff() >= floor_level)
        return out;
    const RVector clipped = ev.cwiseMax(floor_level);
    out.c = hermitian_part(es.eigenvectors() * diag_matrix(clipped) * es.eigenvectors().adjoint());
    out.floored = true;
    return out;
}

/// Eve's interference-plus-noise covariance after she removes both signals
/// with her precoder estimates.
inline EveCovariance covariance_eve(const ChannelSet &ch, const PrecoderSet &pre,
                                    const PowerAllocation &al, const SystemConfig &cfg,
                                    EveResidual model = EveResidual::MismatchError) {
    detail::check_allocation_shapes(pre, al);
    const CMatrix h_e = ch.h_e();
    const CMatrix ps_e = block_diag(diag_matrix(al.p_s_a), diag_matrix(al.p_s_b));
    const CMatrix vhat_e = block_diag(pre.vhat_ae, pre.vhat_be);
    CMatrix middle;
    if (model == EveResidual::Literal) {
        const CMatrix t_e = block_diag(transmit_covariance_a(pre, al), transmit_covariance_b(pre, al));
        middle = t_e - vhat_e * ps_e * vhat_e.adjoint();
    } else {
        const CMatrix an_e = block_diag(an_covariance(pre.v_a, pre.v_a_null, al.p_w_a, al.p_wn_a),
                                        an_covariance(pre.v_b, pre.v_b_null, al.p_w_b, al.p_wn_b));
        const CMatrix dv_e = block_diag(pre.v_a, pre.v_b) - vhat_e;
        middle = an_e + dv_e * ps_e * dv_e.adjoint();
    }
    const Eigen::Index ne = h_e.rows();
    CMatrix c = h_e * middle * h_e.adjoint() + CMatrix::Identity(ne, ne) * cplx(cfg.sigma2, 0.0);
    return floor_eigenvalues(c, cfg.sigma2);
}

struct EveRates {
    double r_ea = 0.0;
    double r_eb = 0.0;
    bool floored = false;
};

/// Eve's rates under successive decoding: Alice's data against C_E, Bob's
/// data against C_E plus Alice's received signal.
inline EveRates rate_eve(const ChannelSet &ch, const PrecoderSet &pre, const PowerAllocation &al,
                         const SystemConfig &cfg, EveResidual model = EveResidual::MismatchError) {
    const auto ce = covariance_eve(ch, pre, al, cfg, model);
    const CMatrix s_a = hermitian_part(ch.h_ea * pre.vhat_ae * diag_matrix(al.p_s_a) *
                                       pre.vhat_ae.adjoint() * ch.h_ea.adjoint());
    const CMatrix s_b = hermitian_part(ch.h_eb * pre.vhat_be * diag_matrix(al.p_s_b) *
                                       pre.vhat_be.adjoint() * ch.h_eb.adjoint());
    EveRates out;
    out.r_ea = logdet_identity_plus(s_a, ce.c);
    out.r_eb = logdet_identity_plus(s_b, s_a + ce.c);
    out.floored = ce.floored;
    return out;
}

/// Joint form log2 det(I + H_E Vhat_E P_s,E Vhat_E^H H_E^H C_E^{-1}).
inline double rate_eve_joint(const ChannelSet &ch, const PrecoderSet &pre, const PowerAllocation &al,
                             const SystemConfig &cfg, EveResidual model = EveResidual::MismatchError) {
    const auto ce = covariance_eve(ch, pre, al, cfg, model);
    const CMatrix h_e = ch.h_e();
    const CMatrix vhat_e = block_diag(pre.vhat_ae, pre.vhat_be);
    const CMatrix ps_e = block_diag(diag_matrix(al.p_s_a), diag_matrix(al.p_s_b));
    const CMatrix s = hermitian_part(h_e * vhat_e * ps_e * vhat_e.adjoint() * h_e.adjoint());
    return logdet_identity_plus(s, ce.c);
}

struct SecrecyRates {
    double r_sa = 0.0;
    double r_sb = 0.0;
    double sum = 0.0;
};

inline SecrecyRates secrecy_rates(double r_ba, double r_ab, double r_ea, double r_eb) {
    SecrecyRates s;
    s.r_sa = std::max(0.0, r_ba - r_ea);
    s.r_sb = std::max(0.0, r_ab - r_eb);
    s.sum = s.r_sa + s.r_sb;
    return s;
}

/// All instantaneous rates for one draw and one allocation.
inline RateReport compute_rates(const ChannelSet &ch, const PrecoderSet &pre, const PowerAllocation &al,
                                const SystemConfig &cfg,
                                EveResidual model = EveResidual::MismatchError) {
    RateReport r;
    r.r_ba = rate_legitimate(ch, pre, al, cfg, Direction::BobToAlice);
    r.r_ab = rate_legitimate(ch, pre, al, cfg, Direction::AliceToBob);
    const auto eve = rate_eve(ch, pre, al, cfg, model);
    r.r_ea = eve.r_ea;
    r.r_eb = eve.r_eb;
    r.floored = eve.floored ? 1 : 0;
    const auto s = secrecy_rates(r.r_ba, r.r_ab, r.r_ea, r.r_eb);
    r.r_sa = s.r_sa;
    r.r_sb = s.r_sb;
    r.sum_secrecy = s.sum;
    return r;
}

} // namespace fdwiretap

#endif
