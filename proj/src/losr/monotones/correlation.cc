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

#include "losr/monotones/correlation.h"

#include <stdexcept>

#include "losr/quantum/index.h"
#include "losr/quantum/linalg.h"

namespace losr {

CorrelationTensor::CorrelationTensor(const DensityMatrix &rho) : parties_(rho.num_parties()) {
    if (parties_ < 1 || parties_ > 4) {
        throw std::invalid_argument("correlation tensor supports 1 to 4 qubits");
    }
    for (int d : rho.dims()) {
        if (d != 2) {
            throw std::invalid_argument("correlation tensor needs qubit parties");
        }
    }
    const auto &paulis = pauli_basis();
    std::vector<int> mu_dims(parties_, 4);
    std::size_t count = index::product(mu_dims);
    r_.resize(count);
    for (std::size_t mu = 0; mu < count; ++mu) {
        auto digits = index::digits(mu, mu_dims);
        Eigen::MatrixXcd op = paulis[static_cast<std::size_t>(digits[0])];
        for (std::size_t k = 1; k < parties_; ++k) {
            op = kron(op, paulis[static_cast<std::size_t>(digits[k])]);
        }
        r_[mu] = rho.matrix().cwiseProduct(op.transpose()).sum().real();
    }
}

Eigen::Matrix3d CorrelationTensor::correlation_matrix() const {
    if (parties_ != 2) {
        throw std::invalid_argument("correlation matrix needs two qubits");
    }
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t(i, j) = r_[static_cast<std::size_t>((i + 1) * 4 + j + 1)];
        }
    }
    return t;
}

std::vector<double> CorrelationTensor::table(const Scenario &scenario, const BlochVectors &vectors) const {
    if (scenario.num_parties() != parties_ || vectors.size() != parties_) {
        throw std::invalid_argument("party count mismatch");
    }
    for (std::size_t k = 0; k < parties_; ++k) {
        if (scenario.outcomes[k] != 2) {
            throw std::invalid_argument("Bloch measurements have two outcomes");
        }
        if (vectors[k].size() != static_cast<std::size_t>(scenario.settings[k])) {
            throw std::invalid_argument("one Bloch vector per setting is required");
        }
    }
    std::size_t rows = scenario.num_setting_tuples();
    std::size_t cols = scenario.num_outcome_tuples();
    double scale = 1.0 / static_cast<double>(cols);
    std::vector<double> out(rows * cols);
    // Contract one party at a time, last party first.
    std::vector<double> work;
    for (std::size_t r = 0; r < rows; ++r) {
        auto s = index::digits(r, scenario.settings);
        for (std::size_t c = 0; c < cols; ++c) {
            work = r_;
            std::size_t size = work.size();
            for (std::size_t k = parties_; k-- > 0;) {
                const Eigen::Vector3d &n = vectors[k][static_cast<std::size_t>(s[k])];
                double sign = ((c >> (parties_ - 1 - k)) & 1U) ? -1.0 : 1.0;
                double u[4] = {1.0, sign * n.x(), sign * n.y(), sign * n.z()};
                size /= 4;
                for (std::size_t i = 0; i < size; ++i) {
                    const double *w = &work[4 * i];
                    work[i] = w[0] * u[0] + w[1] * u[1] + w[2] * u[2] + w[3] * u[3];
                }
            }
            out[r * cols + c] = scale * work[0];
        }
    }
    return out;
}

}  // namespace losr
