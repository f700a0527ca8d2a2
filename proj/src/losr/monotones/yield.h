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

#ifndef LOSR_MONOTONES_YIELD_H
#define LOSR_MONOTONES_YIELD_H

#include <cstdint>
#include <string>

#include "losr/boxes/functional.h"
#include "losr/exec.h"
#include "losr/monotones/measurement.h"
#include "losr/quantum/state.h"

namespace losr {

constexpr int kDefaultRestarts = 32;

struct YieldResult {
    double value = 0.0;
    MeasurementFamily argmax;
    int restarts_used = 0;
    std::uint64_t seed = 0;

    /// "value restarts seed" then one "<party> <setting> <polar> <azimuth>"
    /// line per measurement.
    std::string to_string() const;
};

/// Best value of `f` over Bloch measurements on `rho`, from `restarts`
/// seeded see-saw runs each followed by a Nelder-Mead polish.
///
/// Every party-setting vector enters each table entry affinely, so the
/// see-saw step for one party is an exact maximization. HardyScore is
/// handled with the penalty  p(00|00) - mu * sum of constrained entries,
/// mu ramped 1e3 .. 1e9; the constrained entries are nonnegative Born
/// probabilities (squared amplitudes), so penalizing them directly is the
/// squared-amplitude penalty and keeps the step linear.
///
/// The reported value is evaluate(f, born_box(rho, argmax)). Restarts are
/// independent; Exec::Parallel runs them across OpenMP threads and the
/// reduction keeps the lowest restart index among ties, so both paths give
/// identical results. Throws std::invalid_argument for non-qubit states,
/// party counts other than 2 or 3, or a functional over a different number
/// of parties.
YieldResult optimize_yield(const DensityMatrix &rho, const BellFunctional &f, int restarts, std::uint64_t seed,
                           Exec exec = Exec::Parallel);
YieldResult optimize_yield(const PureState &psi, const BellFunctional &f, int restarts, std::uint64_t seed,
                           Exec exec = Exec::Parallel);

/// 2 sqrt(m1 + m2) for the two largest eigenvalues of T^T T.
double horodecki_chsh(const DensityMatrix &rho);
double horodecki_chsh(const PureState &psi);

}  // namespace losr

#endif
