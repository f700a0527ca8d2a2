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

#ifndef LOSR_BOXES_LOCAL_POLYTOPE_H
#define LOSR_BOXES_LOCAL_POLYTOPE_H

#include <cstddef>
#include <variant>
#include <vector>

#include "losr/boxes/box.h"

namespace losr {

/// Largest vertex count `deterministic_vertices` will enumerate.
constexpr std::size_t kMaxVertices = 1000000;

/// Every deterministic local strategy of the scenario, as a box. Party k has
/// outcomes[k]^settings[k] response functions; vertices are ordered
/// lexicographically with party 0 most significant and, within a party, the
/// response to setting 0 most significant.
std::vector<Box> deterministic_vertices(const Scenario &scenario);

/// Convex weights over `deterministic_vertices(scenario)` reproducing a box.
struct LocalCertificate {
    std::vector<double> weights;
    /// Smallest weight; the LP maximizes it.
    double min_weight = 0.0;
    /// max |sum_v w_v D_v - p| over table entries.
    double reconstruction_error = 0.0;
};

/// A linear functional whose value on the box exceeds its maximum over the
/// local polytope.
struct NonlocalCertificate {
    std::vector<double> coefficients;
    double local_bound = 0.0;
    double box_value = 0.0;

    double margin() const {
        return box_value - local_bound;
    }
};

using LocalMembership = std::variant<LocalCertificate, NonlocalCertificate>;

/// Decides membership in the local polytope by linear programming over the
/// deterministic vertices. Local boxes get the weight vector that maximizes
/// the minimum weight; nonlocal boxes get the Farkas dual of the
/// feasibility problem, with the bound recomputed over all vertices.
/// Throws for signaling boxes (1e-9) and scenarios too large for the dense
/// LP.
LocalMembership local_membership(const Box &box);

inline bool is_local(const LocalMembership &m) {
    return std::holds_alternative<LocalCertificate>(m);
}

/// Independent re-check of a certificate against the vertex list.
bool verify_certificate(const LocalCertificate &cert, const Box &box, double tol = 1e-8);
bool verify_certificate(const NonlocalCertificate &cert, const Box &box, double tol = 1e-9);

}  // namespace losr

#endif
