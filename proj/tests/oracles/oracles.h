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

#ifndef LOSR_TESTS_ORACLES_ORACLES_H
#define LOSR_TESTS_ORACLES_ORACLES_H

// Reference computations for the test suites. They deliberately avoid the
// library's own algorithms: brute force, explicit Kronecker products and
// closed forms only.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace losr::oracle {

struct BruteFactor {
    bool found = false;
    /// Descending, normalized.
    std::vector<double> zeta;
};

/// Tries every assignment of psi entries to the m x k grid phi_i * zeta_j
/// (zeta_j fitted by least squares per column) and accepts when every cell
/// matches within relative tolerance `eps`. Entries must be nonzero.
BruteFactor brute_force_factor(const std::vector<double> &psi, const std::vector<double> &phi, double eps);

/// Nielsen's criterion: descending partial sums of `from` never exceed
/// those of `to`.
bool majorized_by(const std::vector<double> &from, const std::vector<double> &to);

/// Hardy success probability on cos t|00> + sin t|11> when Alice's second
/// measurement has +1 state along `a1` and the three zero conditions fix the
/// remaining measurements. Returns 0 on degenerate configurations.
double hardy_eliminated(double theta, const Eigen::Vector3d &a1);

/// Max of `hardy_eliminated` over a polar x azimuth grid of a1.
double hardy_grid_max(double theta, int polar_steps, int azimuth_steps);

/// 2 sqrt(1 + sin^2 2t).
double chsh_partial_closed_form(double theta);

/// T_ij = Tr[rho sigma_i x sigma_j] by explicit Kronecker products.
Eigen::Matrix3d correlation_matrix_direct(const Eigen::Matrix4cd &rho);

/// Flag state assembled as (U x V)|psi><psi|(U x V)^+ x |i><i| x |j><j| in
/// the order (A, B, fA, fB) and then reindexed to (A, fA, B, fB).
Eigen::MatrixXcd flag_state_direct(const Eigen::VectorXcd &psi, int da, int db, const Eigen::MatrixXd &p,
                                   const std::vector<Eigen::MatrixXcd> &ua,
                                   const std::vector<Eigen::MatrixXcd> &ub);

/// Peres-Horodecki test on a two-qubit density matrix.
bool ppt_two_qubits(const Eigen::Matrix4cd &rho, double tol = 1e-10);

}  // namespace losr::oracle

#endif
