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

#ifndef LOSR_BOXES_SIMPLEX_H
#define LOSR_BOXES_SIMPLEX_H

#include <Eigen/Dense>

namespace losr::lp {

enum class Status {
    Optimal,
    Infeasible,
    Unbounded,
};

struct Result {
    Status status = Status::Infeasible;
    /// Primal solution (Optimal only).
    Eigen::VectorXd x;
    double objective = 0.0;
    /// Phase-one optimum: min sum |Ax - b| over x >= 0. Zero iff feasible.
    double infeasibility = 0.0;
    /// Infeasible only: y with y^T A <= 0 componentwise and y^T b > 0.
    Eigen::VectorXd farkas;
};

/// Minimizes c^T x subject to A x = b, x >= 0 with a dense two-phase tableau
/// simplex using Bland's rule. Redundant equality rows are tolerated.
/// `feasibility_tol` is the phase-one optimum above which the system is
/// declared infeasible.
Result solve_standard_form(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                           double feasibility_tol = 1e-9);

}  // namespace losr::lp

#endif
