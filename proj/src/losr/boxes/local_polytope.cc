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

#include "losr/boxes/local_polytope.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "losr/boxes/simplex.h"
#include "losr/quantum/index.h"

namespace losr {

namespace {

constexpr std::size_t kMaxLpVertices = 8192;
constexpr std::size_t kMaxLpRows = 1024;

std::size_t vertex_count(const Scenario &sc) {
    double count = 1.0;
    for (std::size_t k = 0; k < sc.num_parties(); ++k) {
        count *= std::pow(static_cast<double>(sc.outcomes[k]), sc.settings[k]);
    }
    if (count > static_cast<double>(kMaxVertices)) {
        throw std::invalid_argument("scenario has more than 1e6 deterministic vertices");
    }
    return static_cast<std::size_t>(count);
}

// Response functions of one party: responses[r][s] is the outcome for
// setting s.
std::vector<std::vector<int>> responses(int settings, int outcomes) {
    std::vector<int> dims(static_cast<std::size_t>(settings), outcomes);
    std::size_t count = index::product(dims);
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        out.push_back(index::digits(r, dims));
    }
    return out;
}

Eigen::MatrixXd vertex_matrix(const std::vector<Box> &vertices) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(vertices.front().table().size()),
                      static_cast<Eigen::Index>(vertices.size()));
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto &t = vertices[v].table();
        for (std::size_t i = 0; i < t.size(); ++i) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) = t[i];
        }
    }
    return m;
}

}  // namespace

std::vector<Box> deterministic_vertices(const Scenario &scenario) {
    scenario.validate();
    std::size_t count = vertex_count(scenario);
    std::size_t n = scenario.num_parties();
    std::vector<std::vector<std::vector<int>>> per_party;
    std::vector<int> choice_dims;
    for (std::size_t k = 0; k < n; ++k) {
        per_party.push_back(responses(scenario.settings[k], scenario.outcomes[k]));
        choice_dims.push_back(static_cast<int>(per_party.back().size()));
    }
    std::size_t rows = scenario.num_setting_tuples();
    std::size_t cols = scenario.num_outcome_tuples();
    std::vector<Box> out;
    out.reserve(count);
    for (std::size_t v = 0; v < count; ++v) {
        auto choice = index::digits(v, choice_dims);
        std::vector<double> table(rows * cols, 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            auto s = index::digits(r, scenario.settings);
            std::vector<int> o(n);
            for (std::size_t k = 0; k < n; ++k) {
                o[k] = per_party[k][static_cast<std::size_t>(choice[k])][static_cast<std::size_t>(s[k])];
            }
            table[r * cols + index::flatten(o, scenario.outcomes)] = 1.0;
        }
        out.emplace_back(scenario, std::move(table));
    }
    return out;
}

LocalMembership local_membership(const Box &box) {
    if (!is_no_signaling(box, 1e-9)) {
        throw std::invalid_argument("local polytope membership needs a no-signaling box");
    }
    const Scenario &sc = box.scenario();
    if (vertex_count(sc) > kMaxLpVertices || sc.table_size() > kMaxLpRows) {
        throw std::invalid_argument("scenario is too large for the dense local-polytope LP");
    }
    auto vertices = deterministic_vertices(sc);
    Eigen::MatrixXd d = vertex_matrix(vertices);
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(box.table().data(), static_cast<Eigen::Index>(box.table().size()));
    auto nv = d.cols();

    // Feasibility first: its Farkas dual is the separating functional.
    lp::Result feas = lp::solve_standard_form(d, p, Eigen::VectorXd::Zero(nv));
    if (feas.status == lp::Status::Infeasible) {
        NonlocalCertificate cert;
        Eigen::VectorXd y = feas.farkas;
        double scale = y.cwiseAbs().maxCoeff();
        if (scale > 0.0) {
            y /= scale;
        }
        cert.coefficients.assign(y.data(), y.data() + y.size());
        cert.local_bound = (y.transpose() * d).maxCoeff();
        cert.box_value = y.dot(p);
        return cert;
    }

    // w = w' + t * 1 with w', t >= 0; maximize t.
    Eigen::MatrixXd a(d.rows(), nv + 1);
    a.leftCols(nv) = d;
    a.col(nv) = d.rowwise().sum();
    Eigen::VectorXd c = Eigen::VectorXd::Zero(nv + 1);
    c(nv) = -1.0;
    lp::Result interior = lp::solve_standard_form(a, p, c);
    if (interior.status != lp::Status::Optimal) {
        throw std::runtime_error("local-polytope LP failed after a feasible phase one");
    }
    LocalCertificate cert;
    double t = interior.x(nv);
    Eigen::VectorXd w = interior.x.head(nv).array() + t;
    cert.weights.assign(w.data(), w.data() + w.size());
    cert.min_weight = w.minCoeff();
    cert.reconstruction_error = (d * w - p).cwiseAbs().maxCoeff();
    return cert;
}

bool verify_certificate(const LocalCertificate &cert, const Box &box, double tol) {
    auto vertices = deterministic_vertices(box.scenario());
    if (cert.weights.size() != vertices.size()) {
        return false;
    }
    double total = 0.0;
    std::vector<double> sum(box.table().size(), 0.0);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        double w = cert.weights[v];
        if (w < -tol) {
            return false;
        }
        total += w;
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += w * vertices[v].table()[i];
        }
    }
    if (std::abs(total - 1.0) > tol) {
        return false;
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (std::abs(sum[i] - box.table()[i]) > tol) {
            return false;
        }
    }
    return true;
}

bool verify_certificate(const NonlocalCertificate &cert, const Box &box, double tol) {
    auto vertices = deterministic_vertices(box.scenario());
    if (cert.coefficients.size() != box.table().size()) {
        return false;
    }
    auto value = [&](const std::vector<double> &table) {
        double s = 0.0;
        for (std::size_t i = 0; i < table.size(); ++i) {
            s += cert.coefficients[i] * table[i];
        }
        return s;
    };
    double bound = -std::numeric_limits<double>::infinity();
    for (const auto &v : vertices) {
        bound = std::max(bound, value(v.table()));
    }
    if (bound > cert.local_bound + tol) {
        return false;
    }
    return value(box.table()) > cert.local_bound + tol;
}

}  // namespace losr
