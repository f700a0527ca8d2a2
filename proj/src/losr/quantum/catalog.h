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

#ifndef LOSR_QUANTUM_CATALOG_H
#define LOSR_QUANTUM_CATALOG_H

#include "losr/quantum/state.h"

namespace losr::catalog {

/// (|00> + |11>) / sqrt 2.
PureState phi_plus();

/// sum_i |ii> / sqrt d.
PureState max_entangled(int d);

/// cos(theta) |00> + sin(theta) |11>.
PureState partial(double theta);

/// (|000> + |111>) / sqrt 2.
PureState ghz();

/// phi_plus on (A1, B) tensored with phi_plus on (A2, C), as a four-party
/// state with parties ordered A1, B, A2, C.
PureState two_bell_four_party();

/// The same state as a tripartite state with A = (A1 A2) of dimension 4.
PureState two_bell();

/// |+++> + ((i - 1) / (2 sqrt 2)) |111>, a three-qubit state that is not
/// equivalent to its complex conjugate under local unitaries.
PureState chiral();

/// |0...0> on `parties` qubits.
PureState product(int parties = 2);

/// Angle theta at which partial(theta) maximizes the Hardy probability:
/// sin(2 theta) = 3 - sqrt 5.
double hardy_optimal_angle();

}  // namespace losr::catalog

#endif
