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

#include "losr/selftest/closure.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "losr/monotones/yield.h"
#include "losr/preorder/verdict.h"
#include "losr/quantum/born.h"

namespace losr {

const char *to_string(ScanVerdict verdict) {
    switch (verdict) {
        case ScanVerdict::Skipped:
            return "-";
        case ScanVerdict::Converts:
            return "converts";
        case ScanVerdict::DoesNotConvert:
            return "does_not_convert";
        case ScanVerdict::Undecided:
            return "undecided";
    }
    return "?";
}

std::vector<std::size_t> ClosureScanReport::reachers() const {
    std::vector<std::size_t> out;
    for (const auto &e : entries) {
        if (e.reacher) {
            out.push_back(e.id);
        }
    }
    return out;
}

std::string ClosureScanReport::to_string() const {
    std::ostringstream out;
    out << "candidate yield reacher verdict\n";
    out << std::setprecision(10);
    bool undecided = false;
    for (const auto &e : entries) {
        out << e.id << ' ' << e.yield << ' ' << (e.reacher ? "yes" : "no") << ' ' << losr::to_string(e.verdict)
            << '\n';
        undecided = undecided || e.verdict == ScanVerdict::Undecided;
    }
    if (condition_satisfied) {
        out << "condition satisfied\n";
    } else if (undecided) {
        out << "condition undecided\n";
    } else {
        out << "condition violated\n";
    }
    if (box_unreachable) {
        out << "note box unreachable in candidate set\n";
    }
    return out.str();
}

ClosureScanReport closure_scan(const BellFunctional &f, double target_value, const PureState &target_state,
                               const std::vector<PureState> &candidates, double tol, int restarts,
                               std::uint64_t seed, Exec exec) {
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("tolerance must be nonnegative");
    }
    std::size_t parties = f.scenario.num_parties();
    for (const auto &c : candidates) {
        if (c.dims() != PartyDims(parties, 2)) {
            throw std::invalid_argument("closure scan candidates must be qubit states matching the functional");
        }
    }
    YieldResult own = optimize_yield(target_state, f, restarts, seed, exec);
    std::vector<ClosureEntry> entries(candidates.size());
    auto one = [&](std::size_t i) {
        ClosureEntry &e = entries[i];
        e.id = i;
        e.yield = optimize_yield(candidates[i], f, restarts, seed, Exec::Serial).value;
        e.reacher = e.yield >= target_value - tol;
        if (!e.reacher) {
            return;
        }
        if (parties != 2) {
            e.verdict = ScanVerdict::Undecided;
        } else {
            e.verdict = compare_bipartite(candidates[i], target_state).allows_forward() ? ScanVerdict::Converts
                                                                                          : ScanVerdict::DoesNotConvert;
        }
    };
    long n = static_cast<long>(candidates.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) {
            one(static_cast<std::size_t>(i));
        }
    } else {
        for (long i = 0; i < n; ++i) {
            one(static_cast<std::size_t>(i));
        }
    }

    Box box = born_box(target_state, own.argmax.to_local_measurements(), Exec::Serial);
    ClosureScanReport report{std::move(box), target_value, tol, candidates, std::move(entries), true, true};
    for (const auto &e : report.entries) {
        if (e.reacher) {
            report.box_unreachable = false;
            if (e.verdict != ScanVerdict::Converts) {
                report.condition_satisfied = false;
            }
        }
    }
    return report;
}

PureState conjugate_state(const PureState &psi) {
    return conjugate(psi);
}

}  // namespace losr
