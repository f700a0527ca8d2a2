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

#ifndef LOSR_BOXES_FUNCTIONAL_H
#define LOSR_BOXES_FUNCTIONAL_H

#include <cstddef>
#include <string>
#include <vector>

#include "losr/boxes/box.h"

namespace losr {

enum class FunctionalKind {
    CHSH,
    TiltedCHSH,
    HardyScore,
    MerminGHZ,
};

/// A Bell functional resolved to coefficients over box-table entries.
///
/// Outcome 0 is read as +1 and outcome 1 as -1 in every correlator.
///
/// For HardyScore the linear part selects the objective p(00|00) and
/// `zero_constraints` lists p(00|01), p(00|10), p(11|11), which must vanish.
struct BellFunctional {
    FunctionalKind kind;
    double alpha = 0.0;
    Scenario scenario;
    std::vector<double> coefficients;
    std::vector<std::size_t> zero_constraints;
    std::size_t objective = 0;

    /// E00 + E01 + E10 - E11.
    static BellFunctional chsh();
    /// alpha <A0> + CHSH, with <A0> averaged over Bob's settings.
    static BellFunctional tilted_chsh(double alpha);
    static BellFunctional hardy();
    /// Fraction of the settings 000, 011, 101, 110 on which
    /// a xor b xor c == (x or y or z).
    static BellFunctional mermin_ghz();

    /// Accepts chsh, tilted (uses `alpha`), hardy, mermin.
    static BellFunctional from_name(const std::string &name, double alpha = 0.0);

    std::string name() const;
    bool is_linear() const {
        return kind != FunctionalKind::HardyScore;
    }
    /// Sum of coefficients times table entries.
    double linear_value(const std::vector<double> &table) const;
};

/// Zero constraints of HardyScore must hold to this accuracy.
constexpr double kHardyTolerance = 1e-7;

/// Value of the functional on a box. HardyScore returns p(00|00) when every
/// zero constraint is within kHardyTolerance and 0 otherwise. Throws when the
/// box scenario does not match the functional.
double evaluate(const BellFunctional &f, const Box &box);

/// Largest zero-constraint probability (0 for linear functionals).
double max_constraint_violation(const BellFunctional &f, const Box &box);

}  // namespace losr

#endif
