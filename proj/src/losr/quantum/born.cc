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

#include "losr/quantum/born.h"

#include <algorithm>
#include <stdexcept>

#include "losr/quantum/index.h"
#include "losr/quantum/linalg.h"
#include "losr/tolerances.h"

namespace losr {

void LocalMeasurements::validate(const PartyDims &dims) const {
    if (elements.size() != dims.size()) {
        throw std::invalid_argument("measurements must be given for every party");
    }
    double eps = tolerances().eps_norm;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (elements[k].empty()) {
            throw std::invalid_argument("party " + party_label(static_cast<int>(k)) + " has no settings");
        }
        std::size_t outcomes = elements[k].front().size();
        for (const auto &setting : elements[k]) {
            if (setting.empty() || setting.size() != outcomes) {
                throw std::invalid_argument("all settings of a party need the same number of outcomes");
            }
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dims[k], dims[k]);
            for (const auto &e : setting) {
                if (e.rows() != dims[k] || e.cols() != dims[k]) {
                    throw std::invalid_argument("measurement dimension does not match the state");
                }
                if ((e - e.adjoint()).cwiseAbs().maxCoeff() > eps) {
                    throw std::invalid_argument("POVM element is not Hermitian");
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
                if (solver.eigenvalues().minCoeff() < -eps) {
                    throw std::invalid_argument("POVM element is not positive");
                }
                sum += e;
            }
            if ((sum - Eigen::MatrixXcd::Identity(dims[k], dims[k])).cwiseAbs().maxCoeff() > eps) {
                throw std::invalid_argument("POVM elements do not sum to the identity");
            }
        }
    }
}

Scenario LocalMeasurements::scenario() const {
    Scenario sc;
    for (const auto &party : elements) {
        sc.settings.push_back(static_cast<int>(party.size()));
        sc.outcomes.push_back(party.empty() ? 0 : static_cast<int>(party.front().size()));
    }
    return sc;
}

namespace {

// Fills the outcome distribution of one settings tuple.
void fill_row(const Eigen::MatrixXcd &rho, const LocalMeasurements &meas, const Scenario &sc, std::size_t row,
              double *out) {
    auto settings = index::digits(row, sc.settings);
    std::size_t cols = sc.num_outcome_tuples();
    for (std::size_t c = 0; c < cols; ++c) {
        auto outcomes = index::digits(c, sc.outcomes);
        Eigen::MatrixXcd op = meas.elements[0][settings[0]][outcomes[0]];
        for (std::size_t k = 1; k < sc.num_parties(); ++k) {
            op = kron(op, meas.elements[k][settings[k]][outcomes[k]]);
        }
        // Tr[rho op] = sum_ij rho_ij op_ji.
        out[c] = (rho.cwiseProduct(op.transpose())).sum().real();
    }
}

}  // namespace

Box born_box(const DensityMatrix &rho, const LocalMeasurements &meas, Exec exec) {
    meas.validate(rho.dims());
    Scenario sc = meas.scenario();
    std::size_t rows = sc.num_setting_tuples();
    std::size_t cols = sc.num_outcome_tuples();
    std::vector<double> table(rows * cols);
    const Eigen::MatrixXcd &m = rho.matrix();
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::size_t r = 0; r < rows; ++r) {
            fill_row(m, meas, sc, r, table.data() + r * cols);
        }
    } else {
        for (std::size_t r = 0; r < rows; ++r) {
            fill_row(m, meas, sc, r, table.data() + r * cols);
        }
    }
    for (double &p : table) {
        // Round-off can push exact zeros slightly negative.
        if (p < 0.0 && p > -tolerances().eps_norm) {
            p = 0.0;
        }
    }
    return Box(std::move(sc), std::move(table));
}

Box born_box(const PureState &psi, const LocalMeasurements &meas, Exec exec) {
    return born_box(DensityMatrix::from_pure(psi), meas, exec);
}

}  // namespace losr
