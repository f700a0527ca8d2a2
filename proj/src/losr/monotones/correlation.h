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

#ifndef LOSR_MONOTONES_CORRELATION_H
#define LOSR_MONOTONES_CORRELATION_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "losr/boxes/box.h"
#include "losr/quantum/state.h"

namespace losr {

using BlochVectors = std::vector<std::vector<Eigen::Vector3d>>;

/// Pauli expansion R_mu = Tr[rho sigma_mu1 x ... x sigma_mun] of an n-qubit
/// state, mu in {0,1,2,3}^n flattened with party 0 most significant.
///
/// Born probabilities of Bloch measurements are then
///   p(o|s) = 2^-n sum_mu R_mu prod_k u_k[mu_k],  u_k = (1, (-1)^o_k n_{k,s_k}),
/// which is affine in every Bloch vector. Non-unit vectors give the affine
/// extension of that formula.
class CorrelationTensor {
   public:
    /// Throws std::invalid_argument unless every party is a qubit and there
    /// are between 1 and 4 parties.
    explicit CorrelationTensor(const DensityMatrix &rho);

    std::size_t num_parties() const {
        return parties_;
    }
    const std::vector<double> &coefficients() const {
        return r_;
    }
    /// R for two-qubit states, T(i, j) = <sigma_i x sigma_j>.
    Eigen::Matrix3d correlation_matrix() const;

    /// Box table in the scenario layout. `vectors[k]` needs one entry per
    /// setting of party k; every party must have two outcomes.
    std::vector<double> table(const Scenario &scenario, const BlochVectors &vectors) const;

   private:
    std::size_t parties_;
    std::vector<double> r_;
};

}  // namespace losr

#endif
