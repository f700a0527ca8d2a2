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

#include "losr/quantum/state_io.h"

#include <sstream>

#include <gtest/gtest.h>

#include "losr/quantum/catalog.h"
#include "losr/quantum/random.h"

using namespace losr;

TEST(state_io, roundtrip_pure_and_mixed) {
    std::stringstream s;
    write_state(s, catalog::chiral());
    AnyState back = read_state(s);
    ASSERT_TRUE(std::holds_alternative<PureState>(back));
    EXPECT_EQ(std::get<PureState>(back).amplitudes(), catalog::chiral().amplitudes());

    Rng rng = make_rng(2);
    DensityMatrix rho = random_density_matrix({2, 3}, 2, rng);
    std::stringstream t;
    write_state(t, rho);
    AnyState mixed = read_state(t);
    ASSERT_TRUE(std::holds_alternative<DensityMatrix>(mixed));
    EXPECT_LT(max_entry_distance(std::get<DensityMatrix>(mixed).matrix(), rho.matrix()), 1e-15);
}

TEST(state_io, rejects_malformed) {
    std::stringstream bad("2 2\n1 0\n0 0\n");
    EXPECT_THROW(read_state(bad), std::invalid_argument);
    std::stringstream junk("2 x\n");
    EXPECT_THROW(read_state(junk), std::invalid_argument);
}
