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

#ifndef FDWIRETAP_TYPES_HPP
#define FDWIRETAP_TYPES_HPP

#include <Eigen/Dense>

#include <complex>

namespace fdwiretap {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Link direction for the legitimate rates. BobToAlice is the rate at Bob for
// Alice's data (R_BA); AliceToBob is the rate at Alice for Bob's data (R_AB).
enum class Direction { BobToAlice, AliceToBob };

inline CMatrix diag_matrix(const RVector &d) {
    return d.cast<cplx>().asDiagonal();
}

// Block diagonal of two complex matrices.
inline CMatrix block_diag(const CMatrix &a, const CMatrix &b) {
    CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

inline CMatrix hermitian_part(const CMatrix &m) {
    return (m + m.adjoint()) * 0.5;
}

} // namespace fdwiretap

#endif
