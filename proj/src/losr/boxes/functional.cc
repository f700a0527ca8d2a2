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

#include "losr/boxes/functional.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace losr {

namespace {

std::size_t bipartite_entry(int a, int b, int x, int y) {
    return static_cast<std::size_t>((x * 2 + y) * 4 + a * 2 + b);
}

double sign(int bit) {
    return bit ? -1.0 : 1.0;
}

}  // namespace

BellFunctional BellFunctional::chsh() {
    BellFunctional f{FunctionalKind::CHSH, 0.0, Scenario::uniform(2, 2, 2), std::vector<double>(16, 0.0), {}, 0};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    f.coefficients[bipartite_entry(a, b, x, y)] = sign(a ^ b) * sign(x & y);
                }
            }
        }
    }
    return f;
}

BellFunctional BellFunctional::tilted_chsh(double alpha) {
    BellFunctional f = chsh();
    f.kind = FunctionalKind::TiltedCHSH;
    f.alpha = alpha;
    for (int y = 0; y < 2; ++y) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                f.coefficients[bipartite_entry(a, b, 0, y)] += 0.5 * alpha * sign(a);
            }
        }
    }
    return f;
}

BellFunctional BellFunctional::hardy() {
    BellFunctional f{FunctionalKind::HardyScore, 0.0, Scenario::uniform(2, 2, 2), std::vector<double>(16, 0.0), {}, 0};
    f.objective = bipartite_entry(0, 0, 0, 0);
    f.coefficients[f.objective] = 1.0;
    f.zero_constraints = {bipartite_entry(0, 0, 0, 1), bipartite_entry(0, 0, 1, 0), bipartite_entry(1, 1, 1, 1)};
    return f;
}

BellFunctional BellFunctional::mermin_ghz() {
    BellFunctional f{FunctionalKind::MerminGHZ, 0.0, Scenario::uniform(3, 2, 2), std::vector<double>(64, 0.0), {}, 0};
    for (int s = 0; s < 8; ++s) {
        int x = (s >> 2) & 1, y = (s >> 1) & 1, z = s & 1;
        if ((x ^ y ^ z) != 0) {
            continue;
        }
        int target = x | y | z;
        for (int o = 0; o < 8; ++o) {
            int a = (o >> 2) & 1, b = (o >> 1) & 1, c = o & 1;
            if ((a ^ b ^ c) == target) {
                f.coefficients[static_cast<std::size_t>(s * 8 + o)] = 0.25;
            }
        }
    }
    return f;
}

BellFunctional BellFunctional::from_name(const std::string &name, double alpha) {
    if (name == "chsh") {
        return chsh();
    }
    if (name == "tilted") {
        return tilted_chsh(alpha);
    }
    if (name == "hardy") {
        return hardy();
    }
    if (name == "mermin") {
        return mermin_ghz();
    }
    throw std::invalid_argument("unknown functional '" + name + "' (expected chsh, tilted, hardy, mermin)");
}

std::string BellFunctional::name() const {
    switch (kind) {
        case FunctionalKind::CHSH:
            return "chsh";
        case FunctionalKind::TiltedCHSH: {
            std::ostringstream out;
            out << "tilted(" << alpha << ")";
            return out.str();
        }
        case FunctionalKind::HardyScore:
            return "hardy";
        case FunctionalKind::MerminGHZ:
            return "mermin";
    }
    return "?";
}

double BellFunctional::linear_value(const std::vector<double> &table) const {
    double v = 0.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        v += coefficients[i] * table[i];
    }
    return v;
}

namespace {

void check_shape(const BellFunctional &f, const Box &box) {
    if (!(box.scenario() == f.scenario)) {
        throw std::invalid_argument("box scenario does not match functional " + f.name());
    }
}

}  // namespace

double max_constraint_violation(const BellFunctional &f, const Box &box) {
    check_shape(f, box);
    double worst = 0.0;
    for (std::size_t idx : f.zero_constraints) {
        worst = std::max(worst, std::abs(box.table()[idx]));
    }
    return worst;
}

double evaluate(const BellFunctional &f, const Box &box) {
    check_shape(f, box);
    if (f.kind == FunctionalKind::HardyScore) {
        if (max_constraint_violation(f, box) > kHardyTolerance) {
            return 0.0;
        }
        return box.table()[f.objective];
    }
    return f.linear_value(box.table());
}

}  // namespace losr
