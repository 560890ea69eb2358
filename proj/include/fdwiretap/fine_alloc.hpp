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

#ifndef FDWIRETAP_FINE_ALLOC_HPP
#define FDWIRETAP_FINE_ALLOC_HPP

#include "config.hpp"
#include "rates.hpp"
#include "types.hpp"

#include <optional>
#include <stdexcept>

namespace fdwiretap {

/// Artificial-noise loads for one transmitter: signal space (b entries) and
/// null space (N - b entries).
struct AnSplit {
    RVector p_w;
    RVector p_wn;
    bool flagged = false;
};

struct SignalSplit {
    RVector p_s;
    bool flagged = false;
};

namespace detail {

inline void check_fraction(double x, const char *what) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

// V^H Hhat^H Hhat V
inline CMatrix effective_gram(const CMatrix &hhat, const CMatrix &v) {
    const CMatrix hv = hhat * v;
    return hermitian_part(hv.adjoint() * hv);
}

} // namespace detail

/// Uniform AN: half of (1 - gamma) P in each space, equal within a space.
/// With \p xi the split becomes xi into the signal space and 1 - xi into the
/// null space.
inline AnSplit known_an_uniform(int b, int n_null, double gamma, double power,
                                std::optional<double> xi = std::nullopt) {
    detail::check_fraction(gamma, "gamma");
    const double share = xi.value_or(0.5);
    detail::check_fraction(share, "xi");
    const double an = (1.0 - gamma) * power;
    AnSplit out;
    out.p_w = RVector::Constant(b, share * an / b);
    out.p_wn = RVector::Constant(n_null, (1.0 - share) * an / n_null);
    return out;
}

/// Equal split of gamma_i P_i over the streams and uniform AN on both nodes.
inline PowerAllocation equal_allocation(const SystemConfig &cfg, double gamma_a, double gamma_b) {
    detail::check_fraction(gamma_a, "gamma_a");
    detail::check_fraction(gamma_b, "gamma_b");
    PowerAllocation al;
    al.gamma_a = gamma_a;
    al.gamma_b = gamma_b;
    al.p_s_a = RVector::Constant(cfg.b, gamma_a * cfg.p_alice / cfg.b);
    al.p_s_b = RVector::Constant(cfg.b, gamma_b * cfg.p_bob / cfg.b);
    auto an_a = known_an_uniform(cfg.b, cfg.null_alice(), gamma_a, cfg.p_alice);
    auto an_b = known_an_uniform(cfg.b, cfg.null_bob(), gamma_b, cfg.p_bob);
    al.p_w_a = std::move(an_a.p_w);
    al.p_wn_a = std::move(an_a.p_wn);
    al.p_w_b = std::move(an_b.p_w);
    al.p_wn_b = std::move(an_b.p_wn);
    return al;
}

/// Signal power proportional to each stream's effective gain
/// [V^H Hhat^H Hhat V]_kk. Falls back to an equal split (flagged) when the
/// Gram matrix has zero trace.
inline SignalSplit signal_proportional_allocation(const CMatrix &hhat, const CMatrix &v, double gamma,
                                                  double power) {
    detail::check_fraction(gamma, "gamma");
    const RVector gains = detail::effective_gram(hhat, v).diagonal().real();
    const double total = gains.sum();
    SignalSplit out;
    if (!(total > 0.0)) {
        out.p_s = RVector::Constant(v.cols(), gamma * power / v.cols());
        out.flagged = true;
        return out;
    }
    out.p_s = gamma * power * gains / total;
    return out;
}

/// Whole AN budget on the single direction (null space first, then signal
/// space) that leaks least into the intended receiver. Ties go to the lowest
/// index.
inline AnSplit an_min_stream(const CMatrix &hhat, const CMatrix &v, const CMatrix &v_null,
                             double gamma, double power) {
    detail::check_fraction(gamma, "gamma");
    const Eigen::Index nn = v_null.cols(), b = v.cols();
    RVector leak(nn + b);
    leak.head(nn) = detail::effective_gram(hhat, v_null).diagonal().real();
    leak.tail(b) = detail::effective_gram(hhat, v).diagonal().real();
    Eigen::Index k = 0;
    for (Eigen::Index i = 1; i < leak.size(); ++i)
        if (leak(i) < leak(k))
            k = i;
    AnSplit out;
    out.p_w = RVector::Zero(b);
    out.p_wn = RVector::Zero(nn);
    const double an = (1.0 - gamma) * power;
    if (k < nn)
        out.p_wn(k) = an;
    else
        out.p_w(k - nn) = an;
    return out;
}

/// Signal-space AN inversely proportional to the eigenvalues of
/// V^H Hhat^H Hhat V, null-space AN uniform; xi splits the AN budget between
/// the two. Per-stream loads are the diagonal of U Lambda^{-1} U^H, which is
/// Lambda^{-1} itself when the Gram matrix is diagonal (SVD precoders).
inline AnSplit an_eigen_inverse(const CMatrix &hhat, const CMatrix &v, int n_null, double gamma,
                                double power, double xi) {
    detail::check_fraction(gamma, "gamma");
    detail::check_fraction(xi, "xi");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(detail::effective_gram(hhat, v));
    RVector lambda = es.eigenvalues();
    AnSplit out;
    const double floor_level = 1e-12 * std::max(lambda.maxCoeff(), 1e-300);
    if (lambda.minCoeff() < floor_level) {
        lambda = lambda.cwiseMax(floor_level);
        out.flagged = true;
    }
    const RVector inv = lambda.cwiseInverse();
    const CMatrix &u = es.eigenvectors();
    RVector weights = (u * diag_matrix(inv) * u.adjoint()).diagonal().real();
    weights /= weights.sum();
    const double an = (1.0 - gamma) * power;
    out.p_w = xi * an * weights;
    out.p_wn = RVector::Constant(n_null, n_null > 0 ? (1.0 - xi) * an / n_null : 0.0);
    return out;
}

enum class SignalPolicy { Equal, Proportional };
enum class AnPolicy { Uniform, MinStream, EigenInverse };

struct FinePolicy {
    SignalPolicy signal = SignalPolicy::Equal;
    AnPolicy an = AnPolicy::Uniform;
    std::optional<double> xi; // AN split; Uniform without xi means 1/2
};

/// Per-stream loads for both nodes from the coarse fractions and the
/// legitimate channel estimates. Never looks at Eve's channels.
inline PowerAllocation allocate_fine(const SystemConfig &cfg, const CMatrix &hhat_ba,
                                     const CMatrix &hhat_ab, const PrecoderSet &pre, double gamma_a,
                                     double gamma_b, const FinePolicy &policy) {
    PowerAllocation al;
    al.gamma_a = gamma_a;
    al.gamma_b = gamma_b;
    al.xi_a = al.xi_b = policy.xi.value_or(0.5);

    auto node = [&](const CMatrix &hhat, const CMatrix &v, const CMatrix &v_null, double gamma,
                    double power, RVector &p_s, RVector &p_w, RVector &p_wn) {
        if (policy.signal == SignalPolicy::Proportional) {
            auto s = signal_proportional_allocation(hhat, v, gamma, power);
            p_s = std::move(s.p_s);
            al.fallbacks += s.flagged;
        } else {
            p_s = RVector::Constant(v.cols(), gamma * power / v.cols());
        }
        AnSplit an;
        switch (policy.an) {
        case AnPolicy::Uniform:
            an = known_an_uniform(int(v.cols()), int(v_null.cols()), gamma, power, policy.xi);
            break;
        case AnPolicy::MinStream:
            an = an_min_stream(hhat, v, v_null, gamma, power);
            break;
        case AnPolicy::EigenInverse:
            an = an_eigen_inverse(hhat, v, int(v_null.cols()), gamma, power, policy.xi.value_or(0.5));
            break;
        }
        al.fallbacks += an.flagged;
        p_w = std::move(an.p_w);
        p_wn = std::move(an.p_wn);
    };
    node(hhat_ba, pre.v_a, pre.v_a_null, gamma_a, cfg.p_alice, al.p_s_a, al.p_w_a, al.p_wn_a);
    node(hhat_ab, pre.v_b, pre.v_b_null, gamma_b, cfg.p_bob, al.p_s_b, al.p_w_b, al.p_wn_b);
    return al;
}

} // namespace fdwiretap

#endif
