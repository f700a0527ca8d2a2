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

#ifndef LOSR_QUANTUM_STATE_IO_H
#define LOSR_QUANTUM_STATE_IO_H

#include <iosfwd>
#include <variant>

#include "losr/quantum/state.h"

namespace losr {

using AnyState = std::variant<PureState, DensityMatrix>;

/// Reads the text state format: the first line lists party dimensions, then
/// one `re im` pair per line. D pairs give a pure state, D*D pairs a density
/// matrix (row-major), where D is the product of the dimensions.
AnyState read_state(std::istream &in);

void write_state(std::ostream &out, const PureState &psi);
void write_state(std::ostream &out, const DensityMatrix &rho);

DensityMatrix as_density(const AnyState &state);

}  // namespace losr

#endif
