// Copyright 2026 The LOSR Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOSR_QUANTUM_LINALG_H
#define LOSR_QUANTUM_LINALG_H

#include <array>

#include <Eigen/Dense>

namespace losr {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Identity followed by Pauli X, Y, Z.
inline const std::array<Eigen::Matrix2cd, 4> &pauli_basis() {
    static const std::array<Eigen::Matrix2cd, 4> basis = [] {
        using C = std::complex<double>;
        std::array<Eigen::Matrix2cd, 4> m;
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, C(0, -1), C(0, 1), 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    return basis;
}

/// Projector onto outcome `outcome` of the qubit measurement along `bloch`.
/// Outcome 0 is the +1 eigenvalue of bloch . sigma. A non-unit vector gives
/// the affine extension (I +- n.sigma)/2, used by the optimizers.
inline Eigen::Matrix2cd bloch_projector(const Eigen::Vector3d &bloch, int outcome) {
    const auto &p = pauli_basis();
    double sign = outcome == 0 ? 1.0 : -1.0;
    Eigen::Matrix2cd s = bloch.x() * p[1] + bloch.y() * p[2] + bloch.z() * p[3];
    return 0.5 * (p[0] + sign * s);
}

/// max |U^dagger U - I|.
inline double unitarity_defect(const Eigen::MatrixXcd &u) {
    if (u.rows() != u.cols()) {
        return 1e300;
    }
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace losr

#endif
