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

#include "losr/boxes/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace losr::lp {

namespace {

constexpr double kPivotTol = 1e-11;

class Tableau {
   public:
    Tableau(const Eigen::MatrixXd &a, const Eigen::VectorXd &b)
        : m_(a.rows()), n_(a.cols()), t_(Eigen::MatrixXd::Zero(a.rows() + 1, a.cols() + a.rows() + 1)),
          basis_(static_cast<std::size_t>(a.rows())), sign_(a.rows()) {
        for (Eigen::Index i = 0; i < m_; ++i) {
            sign_(i) = b(i) < 0 ? -1.0 : 1.0;
            t_.row(i).head(n_) = sign_(i) * a.row(i);
            t_(i, n_ + i) = 1.0;
            t_(i, rhs()) = sign_(i) * b(i);
            basis_[static_cast<std::size_t>(i)] = n_ + i;
        }
        active_.assign(static_cast<std::size_t>(m_), true);
    }

    Eigen::Index rhs() const {
        return n_ + m_;
    }

    // Phase one: minimize the sum of artificials.
    Status phase_one() {
        t_.row(m_).setZero();
        for (Eigen::Index i = 0; i < m_; ++i) {
            t_.row(m_).head(n_) -= t_.row(i).head(n_);
            t_(m_, rhs()) -= t_(i, rhs());
        }
        return iterate(n_ + m_);
    }

    double objective() const {
        return -t_(m_, rhs());
    }

    // y with y^T A <= 0 and y^T b equal to the phase-one optimum.
    Eigen::VectorXd phase_one_duals() const {
        Eigen::VectorXd y(m_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            y(i) = sign_(i) * (1.0 - t_(m_, n_ + i));
        }
        return y;
    }

    Status phase_two(const Eigen::VectorXd &c) {
        // Drive zero-level artificials out of the basis; rows where that is
        // impossible are redundant and are retired.
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] < n_) {
                continue;
            }
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < n_; ++j) {
                if (std::abs(t_(i, j)) > kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter >= 0) {
                pivot(i, enter);
            } else {
                active_[static_cast<std::size_t>(i)] = false;
            }
        }
        t_.row(m_).setZero();
        t_.row(m_).head(n_) = c.transpose();
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (!active_[static_cast<std::size_t>(i)]) {
                continue;
            }
            double cb = c(basis_[static_cast<std::size_t>(i)]);
            if (cb != 0.0) {
                t_.row(m_).head(n_) -= cb * t_.row(i).head(n_);
                t_(m_, rhs()) -= cb * t_(i, rhs());
            }
        }
        return iterate(n_);
    }

    Eigen::VectorXd primal() const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            auto j = basis_[static_cast<std::size_t>(i)];
            if (active_[static_cast<std::size_t>(i)] && j < n_) {
                x(j) = std::max(0.0, t_(i, rhs()));
            }
        }
        return x;
    }

   private:
    // Bland's rule over columns [0, limit).
    Status iterate(Eigen::Index limit) {
        const int max_iter = 50000;
        for (int iter = 0; iter < max_iter; ++iter) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < limit; ++j) {
                if (t_(m_, j) < -1e-12) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) {
                return Status::Optimal;
            }
            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m_; ++i) {
                if (!active_[static_cast<std::size_t>(i)] || t_(i, enter) <= kPivotTol) {
                    continue;
                }
                double ratio = t_(i, rhs()) / t_(i, enter);
                if (ratio < best - 1e-14 ||
                    (ratio <= best + 1e-14 && leave >= 0 &&
                     basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) {
                return Status::Unbounded;
            }
            pivot(leave, enter);
        }
        throw std::runtime_error("simplex iteration limit reached");
    }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index i = 0; i <= m_; ++i) {
            if (i != row && t_(i, col) != 0.0) {
                t_.row(i) -= t_(i, col) * t_.row(row);
            }
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    Eigen::Index m_;
    Eigen::Index n_;
    Eigen::MatrixXd t_;
    std::vector<Eigen::Index> basis_;
    std::vector<bool> active_;
    Eigen::VectorXd sign_;
};

}  // namespace

Result solve_standard_form(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                           double feasibility_tol) {
    if (a.rows() != b.size() || a.cols() != c.size()) {
        throw std::invalid_argument("LP dimensions are inconsistent");
    }
    Tableau tab(a, b);
    Result result;
    tab.phase_one();
    result.infeasibility = tab.objective();
    if (result.infeasibility > feasibility_tol) {
        result.status = Status::Infeasible;
        result.farkas = tab.phase_one_duals();
        return result;
    }
    result.status = tab.phase_two(c);
    if (result.status == Status::Optimal) {
        result.x = tab.primal();
        result.objective = c.dot(result.x);
    }
    return result;
}

}  // namespace losr::lp
