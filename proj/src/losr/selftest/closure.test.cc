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

#include <cmath>
#include <gtest/gtest.h>

#include "losr/quantum/catalog.h"
#include "losr/quantum/random.h"
#include "losr/quantum/schmidt.h"

using namespace losr;

TEST(closure_scan, chsh_self_tests_bell_state_on_candidates) {
    ClosureScanReport r = closure_scan(BellFunctional::chsh(), 2.0 * std::sqrt(2.0), catalog::phi_plus(),
                                       {catalog::phi_plus(), catalog::partial(M_PI / 8), catalog::product()}, 1e-6,
                                       16, 1);
    EXPECT_EQ(r.reachers(), std::vector<std::size_t>{0});
    EXPECT_EQ(r.entries[0].verdict, ScanVerdict::Converts);
    EXPECT_TRUE(r.condition_satisfied);
    EXPECT_FALSE(r.box_unreachable);
    EXPECT_NEAR(evaluate(BellFunctional::chsh(), r.box), 2.0 * std::sqrt(2.0), 1e-6);
    std::string text = r.to_string();
    EXPECT_EQ(text.substr(0, 31), "candidate yield reacher verdict");
    EXPECT_NE(text.find("condition satisfied"), std::string::npos);
}

TEST(closure_scan, hardy_singles_out_optimal_state) {
    PureState best = catalog::partial(catalog::hardy_optimal_angle());
    ClosureScanReport r =
        closure_scan(BellFunctional::hardy(), 0.09, best, {catalog::phi_plus(), best}, 1e-6, 32, 1);
    EXPECT_EQ(r.reachers(), std::vector<std::size_t>{1});
    EXPECT_TRUE(r.condition_satisfied);
}

TEST(closure_scan, unreachable_box_is_vacuous) {
    ClosureScanReport r = closure_scan(BellFunctional::chsh(), 3.5, catalog::phi_plus(),
                                       {catalog::phi_plus(), catalog::product()}, 1e-6, 4, 1);
    EXPECT_TRUE(r.reachers().empty());
    EXPECT_TRUE(r.condition_satisfied);
    EXPECT_TRUE(r.box_unreachable);
    EXPECT_NE(r.to_string().find("box unreachable in candidate set"), std::string::npos);
}

TEST(closure_scan, violation_and_tolerance_monotonicity) {
    // Target the partially entangled state with the Bell state as a reacher.
    PureState target = catalog::partial(M_PI / 8);
    std::vector<PureState> cands{catalog::phi_plus(), target, catalog::partial(0.2), catalog::product()};
    std::vector<std::size_t> previous;
    for (double tol : {0.0, 0.1, 0.5, 1.0}) {
        ClosureScanReport r =
            closure_scan(BellFunctional::chsh(), std::sqrt(6.0) - 1e-7, target, cands, tol, 8, 1);
        auto now = r.reachers();
        for (std::size_t id : previous) {
            EXPECT_NE(std::find(now.begin(), now.end(), id), now.end());
        }
        previous = now;
        EXPECT_FALSE(r.condition_satisfied);
    }
}

TEST(closure_scan, multipartite_reachers_are_undecided) {
    ClosureScanReport r = closure_scan(BellFunctional::mermin_ghz(), 1.0, catalog::ghz(), {catalog::ghz()}, 1e-6, 8, 1);
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_TRUE(r.entries[0].reacher);
    EXPECT_EQ(r.entries[0].verdict, ScanVerdict::Undecided);
    EXPECT_FALSE(r.condition_satisfied);
    EXPECT_THROW(closure_scan(BellFunctional::chsh(), 2.0, catalog::phi_plus(), {catalog::ghz()}, 1e-6, 4, 1),
                 std::invalid_argument);
}

TEST(conjugate_state, involution_and_spectra) {
    PureState real = catalog::partial(0.3);
    EXPECT_EQ(conjugate_state(real).amplitudes(), real.amplitudes());
    Rng rng = make_rng(51);
    for (int t = 0; t < 10; ++t) {
        PureState psi = random_pure_state({2, 3, 2}, rng);
        PureState c = conjugate_state(psi);
        EXPECT_EQ(conjugate_state(c).amplitudes(), psi.amplitudes());
        for (const auto &b : Bipartition::all(3)) {
            auto x = schmidt_spectrum(psi, b);
            auto y = schmidt_spectrum(c, b);
            for (std::size_t i = 0; i < x.size(); ++i) {
                EXPECT_NEAR(x[i], y[i], 1e-10);
            }
        }
    }
    for (const auto &b : Bipartition::all(3)) {
        auto x = schmidt_spectrum(catalog::chiral(), b);
        auto y = schmidt_spectrum(conjugate_state(catalog::chiral()), b);
        EXPECT_NEAR(x[0], y[0], 1e-12);
    }
}
