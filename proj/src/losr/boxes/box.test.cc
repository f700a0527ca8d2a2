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

#include "losr/boxes/box.h"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "losr/boxes/functional.h"

using namespace losr;

TEST(box, validation) {
    Scenario sc = Scenario::uniform(2, 2, 2);
    EXPECT_THROW(Box(sc, std::vector<double>(15, 0.25)), std::invalid_argument);
    std::vector<double> t(16, 0.25);
    t[0] = -0.01;
    t[1] = 0.26;
    EXPECT_THROW(Box(sc, t), std::invalid_argument);
    std::vector<double> u(16, 0.25);
    u[0] = 0.3;
    EXPECT_THROW(Box(sc, u), std::invalid_argument);
    EXPECT_THROW(Scenario({2}, {2, 2}).validate(), std::invalid_argument);
}

TEST(box, no_signaling) {
    EXPECT_TRUE(is_no_signaling(pr_box(), 1e-12));
    EXPECT_TRUE(is_no_signaling(tsirelson_box(), 1e-12));
    // Bob outputs Alice's setting.
    Scenario sc = Scenario::uniform(2, 2, 2);
    std::vector<double> t(16, 0.0);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            t[(x * 2 + y) * 4 + 0 * 2 + x] = 1.0;
        }
    }
    EXPECT_FALSE(is_no_signaling(Box(sc, t), 1e-9));
}

TEST(box, prob_and_mix) {
    Box pr = pr_box();
    EXPECT_DOUBLE_EQ(pr.prob({0, 0}, {0, 0}), 0.5);
    EXPECT_DOUBLE_EQ(pr.prob({0, 1}, {1, 1}), 0.5);
    EXPECT_DOUBLE_EQ(pr.prob({0, 0}, {1, 1}), 0.0);
    Box half = pr.mix(uniform_box(pr.scenario()), 0.5);
    EXPECT_DOUBLE_EQ(half.prob({0, 0}, {0, 0}), 0.375);
}

TEST(box, io_roundtrip) {
    std::stringstream s;
    write_box(s, tsirelson_box());
    Box back = read_box(s);
    EXPECT_EQ(back.scenario(), tsirelson_box().scenario());
    for (std::size_t i = 0; i < back.table().size(); ++i) {
        EXPECT_NEAR(back.table()[i], tsirelson_box().table()[i], 1e-16);
    }
    std::stringstream bad("2 2 2 2 2\n0.5 0.5\n");
    EXPECT_THROW(read_box(bad), std::invalid_argument);
}

TEST(functional, chsh_values) {
    BellFunctional f = BellFunctional::chsh();
    EXPECT_NEAR(evaluate(f, pr_box()), 4.0, 1e-15);
    EXPECT_NEAR(evaluate(f, tsirelson_box()), 2.0 * std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(evaluate(f, uniform_box(f.scenario)), 0.0, 1e-15);
    EXPECT_NEAR(evaluate(BellFunctional::tilted_chsh(0.5), pr_box()), 4.0, 1e-15);
    EXPECT_THROW(evaluate(BellFunctional::mermin_ghz(), pr_box()), std::invalid_argument);
    EXPECT_THROW(BellFunctional::from_name("nope"), std::invalid_argument);
    EXPECT_EQ(BellFunctional::from_name("tilted", 0.25).alpha, 0.25);
}

TEST(functional, tilted_marginal_term) {
    // Alice always outputs 0, Bob uniform: CHSH 0, <A0> = 1.
    Scenario sc = Scenario::uniform(2, 2, 2);
    std::vector<double> t(16, 0.0);
    for (int r = 0; r < 4; ++r) {
        t[r * 4 + 0] = 0.5;
        t[r * 4 + 1] = 0.5;
    }
    EXPECT_NEAR(evaluate(BellFunctional::tilted_chsh(0.7), Box(sc, t)), 0.7, 1e-15);
}

TEST(functional, hardy_score) {
    BellFunctional h = BellFunctional::hardy();
    // Deterministic all-zero outputs violate p(00|01) = 0.
    Scenario sc = Scenario::uniform(2, 2, 2);
    std::vector<double> t(16, 0.0);
    for (int r = 0; r < 4; ++r) {
        t[r * 4] = 1.0;
    }
    EXPECT_EQ(evaluate(h, Box(sc, t)), 0.0);
    EXPECT_NEAR(max_constraint_violation(h, Box(sc, t)), 1.0, 1e-15);
    // The PR box puts weight on 00 for settings 01.
    EXPECT_EQ(evaluate(h, pr_box()), 0.0);
    // a xor b = 1 except on settings 00: all constraints hold, p(00|00) = 1/2.
    std::vector<double> q(16, 0.0);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            int parity = (x == 0 && y == 0) ? 0 : 1;
            for (int a = 0; a < 2; ++a) {
                q[(x * 2 + y) * 4 + a * 2 + (a ^ parity)] = 0.5;
            }
        }
    }
    Box hardy_box(sc, q);
    EXPECT_NEAR(evaluate(h, hardy_box), 0.5, 1e-15);
    EXPECT_EQ(max_constraint_violation(h, hardy_box), 0.0);
}
