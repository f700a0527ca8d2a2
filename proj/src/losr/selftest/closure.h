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

#ifndef LOSR_SELFTEST_CLOSURE_H
#define LOSR_SELFTEST_CLOSURE_H

#include <cstdint>
#include <string>
#include <vector>

#include "losr/boxes/box.h"
#include "losr/boxes/functional.h"
#include "losr/exec.h"
#include "losr/quantum/state.h"

namespace losr {

enum class ScanVerdict {
    /// Not a reacher; no conversion question asked.
    Skipped,
    Converts,
    DoesNotConvert,
    /// Multipartite reacher; only necessary conditions exist.
    Undecided,
};

const char *to_string(ScanVerdict verdict);

struct ClosureEntry {
    std::size_t id = 0;
    double yield = 0.0;
    bool reacher = false;
    ScanVerdict verdict = ScanVerdict::Skipped;
};

/// Upward-closure test of a target state against a finite candidate set.
/// Conclusions hold for these candidates only.
struct ClosureScanReport {
    /// The box the target state reaches at its own optimized measurements.
    Box box;
    double target_value = 0.0;
    double tol = 0.0;
    std::vector<PureState> candidates;
    std::vector<ClosureEntry> entries;
    /// Every decided reacher converts to the target and none is undecided.
    bool condition_satisfied = false;
    /// No candidate reaches the target value.
    bool box_unreachable = false;

    std::vector<std::size_t> reachers() const;

    /// Header line "candidate yield reacher verdict", one row per candidate,
    /// then "condition satisfied|violated|undecided" and, when applicable,
    /// "note box unreachable in candidate set".
    std::string to_string() const;
};

/// A candidate reaches the box iff optimize_yield(candidate, f) >=
/// target_value - tol; each bipartite reacher is then compared with the
/// target state. Candidates must be qubit states matching the functional's
/// party count (std::invalid_argument otherwise). Candidates are evaluated
/// independently (in parallel with Exec::Parallel); entries stay in
/// candidate order.
ClosureScanReport closure_scan(const BellFunctional &f, double target_value, const PureState &target_state,
                               const std::vector<PureState> &candidates, double tol, int restarts,
                               std::uint64_t seed, Exec exec = Exec::Parallel);

/// Entrywise complex conjugate in the computational basis.
PureState conjugate_state(const PureState &psi);

}  // namespace losr

#endif
