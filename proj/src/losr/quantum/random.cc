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

#include "losr/quantum/random.h"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace losr {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

Eigen::Vector3d random_unit_vector(Rng &rng) {
    std::normal_distribution<double> g;
    Eigen::Vector3d v;
    do {
        v = Eigen::Vector3d(g(rng), g(rng), g(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

Eigen::MatrixXcd random_ginibre(int rows, int cols, Rng &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

Eigen::MatrixXcd random_isometry(int rows, int cols, Rng &rng) {
    if (rows < cols || cols < 1) {
        throw std::invalid_argument("isometry needs rows >= cols >= 1");
    }
    Eigen::MatrixXcd z = random_ginibre(rows, cols, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    Eigen::MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < cols; ++j) {
        Complex d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= a > 0.0 ? d / a : Complex(1.0);
    }
    return q;
}

Eigen::MatrixXcd random_unitary(int dim, Rng &rng) {
    return random_isometry(dim, dim, rng);
}

PureState random_pure_state(const PartyDims &dims, Rng &rng) {
    int d = static_cast<int>(total_dimension(dims));
    Eigen::VectorXcd v = random_ginibre(d, 1, rng).col(0);
    return PureState(dims, v.normalized());
}

DensityMatrix random_density_matrix(const PartyDims &dims, int rank, Rng &rng) {
    if (rank < 1) {
        throw std::invalid_argument("rank must be positive");
    }
    int d = static_cast<int>(total_dimension(dims));
    Eigen::MatrixXcd g = random_ginibre(d, rank, rng);
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(dims, rho);
}

}  // namespace losr
