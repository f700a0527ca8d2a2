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

#ifndef LOSR_QUANTUM_BORN_H
#define LOSR_QUANTUM_BORN_H

#include <vector>

#include <Eigen/Dense>

#include "losr/boxes/box.h"
#include "losr/exec.h"
#include "losr/quantum/state.h"

namespace losr {

/// POVM elements for every (party, setting). `elements[k][s]` is the list of
/// effects of setting s at party k; all settings of a party must have the
/// same number of outcomes.
struct LocalMeasurements {
    std::vector<std::vector<std::vector<Eigen::MatrixXcd>>> elements;

    /// Throws unless every effect is Hermitian, positive, of the party's
    /// dimension, and every setting sums to the identity (eps_norm).
    void validate(const PartyDims &dims) const;
    Scenario scenario() const;
};

/// p(o|s) = Re Tr[rho (E^1_{o_1|s_1} x ... x E^n_{o_n|s_n})].
Box born_box(const DensityMatrix &rho, const LocalMeasurements &meas, Exec exec = Exec::Parallel);
Box born_box(const PureState &psi, const LocalMeasurements &meas, Exec exec = Exec::Parallel);

}  // namespace losr

#endif
