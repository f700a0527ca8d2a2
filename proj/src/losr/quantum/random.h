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

#ifndef LOSR_QUANTUM_RANDOM_H
#define LOSR_QUANTUM_RANDOM_H

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "losr/quantum/state.h"

namespace losr {

using Rng = std::mt19937_64;

/// Seeds from a seed sequence so that nearby integers give unrelated streams.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

Eigen::Vector3d random_unit_vector(Rng &rng);
/// Complex Gaussian (Ginibre) matrix.
Eigen::MatrixXcd random_ginibre(int rows, int cols, Rng &rng);
/// Haar-random unitary via QR with the phase correction.
Eigen::MatrixXcd random_unitary(int dim, Rng &rng);
/// Haar-random m x n isometry (m >= n).
Eigen::MatrixXcd random_isometry(int rows, int cols, Rng &rng);

PureState random_pure_state(const PartyDims &dims, Rng &rng);
/// Induced measure: partial trace of a random pure state with an ancilla of
/// dimension `rank`.
DensityMatrix random_density_matrix(const PartyDims &dims, int rank, Rng &rng);

}  // namespace losr

#endif
