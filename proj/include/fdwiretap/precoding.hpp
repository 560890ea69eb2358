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

#ifndef FDWIRETAP_PRECODING_HPP
#define FDWIRETAP_PRECODING_HPP

#include "channel.hpp"
#include "types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fdwiretap {

struct PrecoderPair {
    CMatrix v;      // N x b, right singular vectors of the b largest singular values
    CMatrix v_null; // N x (N - b), the remaining right singular vectors
};

/// Legitimate precoders, their null-space complements, and Eve's copies.
struct PrecoderSet {
    CMatrix v_a, v_a_null;
    CMatrix v_b, v_b_null;
    CMatrix vhat_ae; // Eve's version of v_a
    CMatrix vhat_be; // Eve's version of v_b
};

namespace detail {

// Rotates each column so that its largest-magnitude entry is real positive.
// Ties go to the lowest row index.
inline void fix_column_phases(CMatrix &m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double mag = std::abs(m(r, c));
            if (mag > best * (1.0 + 1e-12)) {
                best = mag;
                arg = r;
            }
        }
        if (best > 0.0)
            m.col(c) *= std::conj(m(arg, c)) / best;
    }
}

} // namespace detail

/// Splits the right singular vectors of \p hhat into the b dominant ones and
/// the rest. Singular values come out in descending order from the SVD; the
/// column phase is then fixed deterministically.
inline PrecoderPair build_precoder(const CMatrix &hhat, int b) {
    const Eigen::Index n = hhat.cols();
    if (b < 1 || b > std::min(hhat.rows(), n))
        throw std::invalid_argument("build_precoder: b must lie in [1, min(rows, cols)]");
    Eigen::JacobiSVD<CMatrix> svd(hhat, Eigen::ComputeFullV);
    CMatrix v_full = svd.matrixV();
    detail::fix_column_phases(v_full);
    return {v_full.leftCols(b), v_full.rightCols(n - b)};
}

/// Squared chordal distance implied by a Frobenius mismatch kappa.
inline double kappa_to_chordal(double kappa, int b) {
    if (!(kappa >= 0.0 && kappa <= 2.0 * b))
        throw std::invalid_argument("kappa_to_chordal: kappa must lie in [0, 2b], got " +
                                    std::to_string(kappa));
    const double r = 1.0 - kappa / (2.0 * b);
    return b * (1.0 - r * r);
}

/// ||vhat - v||_F^2 expressed through the real trace of vhat^H v.
inline double measure_kappa(const CMatrix &vhat, const CMatrix &v) {
    if (vhat.rows() != v.rows() || vhat.cols() != v.cols())
        throw std::invalid_argument("measure_kappa: shape mismatch");
    const double b = static_cast<double>(v.cols());
    return 2.0 * b - 2.0 * (vhat.adjoint() * v).trace().real();
}

/// Eve's precoder at mismatch kappa: v*sqrt(1 - d/b) + n*sqrt(d/b), where n
/// is the first b columns of \p v_null and d the squared chordal distance.
inline CMatrix synthesize_eve_precoder(const CMatrix &v, const CMatrix &v_null, double kappa) {
    const int b = static_cast<int>(v.cols());
    if (v_null.cols() < b)
        throw std::invalid_argument("synthesize_eve_precoder: insufficient null space");
    const double d = kappa_to_chordal(kappa, b);
    const double keep = std::sqrt(std::max(0.0, 1.0 - d / b));
    const double swap = std::sqrt(std::min(1.0, d / b));
    if (swap == 0.0)
        return v;
    return v * keep + v_null.leftCols(b) * swap;
}

/// Precoders for one channel draw: Alice's from hhat_ba, Bob's from hhat_ab,
/// and Eve's synthesized copies at the configured mismatches.
inline PrecoderSet build_precoder_set(const ChannelSet &ch, int b, double kappa_a, double kappa_b) {
    PrecoderSet out;
    auto pa = build_precoder(ch.hhat_ba, b);
    auto pb = build_precoder(ch.hhat_ab, b);
    out.v_a = std::move(pa.v);
    out.v_a_null = std::move(pa.v_null);
    out.v_b = std::move(pb.v);
    out.v_b_null = std::move(pb.v_null);
    out.vhat_ae = synthesize_eve_precoder(out.v_a, out.v_a_null, kappa_a);
    out.vhat_be = synthesize_eve_precoder(out.v_b, out.v_b_null, kappa_b);
    return out;
}

} // namespace fdwiretap

#endif
