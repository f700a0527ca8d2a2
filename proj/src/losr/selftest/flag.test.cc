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

#include "losr/selftest/flag.h"

#include <gtest/gtest.h>

#include "losr/quantum/catalog.h"
#include "losr/quantum/linalg.h"
#include "losr/quantum/random.h"
#include "losr/quantum/schmidt.h"
#include "oracles.h"

using namespace losr;

namespace {

Eigen::MatrixXcd pauli(int i) {
    return pauli_basis()[static_cast<std::size_t>(i)];
}

FlagConstruction bell_example() {
    return {catalog::phi_plus(), Eigen::MatrixXd::Constant(2, 2, 0.25), {pauli(0), pauli(1)}, {pauli(0), pauli(3)}};
}

}  // namespace

TEST(flag_mixed_state, trivial_flags) {
    FlagConstruction fc{catalog::partial(0.3), Eigen::MatrixXd::Ones(1, 1), {pauli(0)}, {pauli(0)}};
    DensityMatrix rho = flag_mixed_state(fc);
    EXPECT_EQ(rho.dims(), (PartyDims{2, 2}));
    EXPECT_LT(max_entry_distance(rho.matrix(), DensityMatrix::from_pure(fc.base_state).matrix()), 1e-15);
}

TEST(flag_mixed_state, bell_example_structure) {
    FlagConstruction fc = bell_example();
    DensityMatrix rho = flag_mixed_state(fc);
    EXPECT_EQ(rho.dims(), (PartyDims{4, 4}));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        rank += es.eigenvalues()(i) > 1e-12 ? 1 : 0;
    }
    EXPECT_EQ(rank, 4);
    // Flag register (fA, fB) is maximally mixed: purity 1/4.
    DensityMatrix four = DensityMatrix(PartyDims{2, 2, 2, 2}, rho.matrix());
    DensityMatrix flags = partial_trace(four, {1, 3});
    EXPECT_NEAR((flags.matrix() * flags.matrix()).trace().real(), 0.25, 1e-14);
    Eigen::MatrixXcd direct =
        oracle::flag_state_direct(fc.base_state.amplitudes(), 2, 2, fc.dist, fc.unitaries_a, fc.unitaries_b);
    EXPECT_LT(max_entry_distance(rho.matrix(), direct), 1e-14);
}

TEST(flag_mixed_state, product_base_is_separable) {
    Rng rng = make_rng(41);
    PureState base = tensor_product(random_pure_state({2}, rng), random_pure_state({2}, rng));
    FlagConstruction fc{base, Eigen::MatrixXd::Constant(2, 1, 0.5), {random_unitary(2, rng), random_unitary(2, rng)},
                        {random_unitary(2, rng)}};
    DensityMatrix rho = flag_mixed_state(fc);
    // With a trivial Bob flag the state is a two-qubit block on each A flag
    // value; it is a mixture of products.
    DensityMatrix three(PartyDims{2, 2, 2}, rho.matrix());
    DensityMatrix ab = partial_trace(three, {0, 2});
    EXPECT_TRUE(oracle::ppt_two_qubits(ab.matrix()));
    EXPECT_NEAR(schmidt_spectrum(base, Bipartition({0}, 2))[0], 1.0, 1e-12);
}

TEST(flag_mixed_state, rejects_bad_constructions) {
    FlagConstruction fc = bell_example();
    fc.dist(0, 0) = 0.5;
    EXPECT_THROW(flag_mixed_state(fc), std::invalid_argument);
    FlagConstruction g = bell_example();
    g.unitaries_a[1] *= 1.01;
    EXPECT_THROW(flag_mixed_state(g), std::invalid_argument);
    FlagConstruction h = bell_example();
    h.unitaries_b.push_back(pauli(2));
    EXPECT_THROW(flag_mixed_state(h), std::invalid_argument);
}

TEST(flag_roundtrip, passes_and_reports_channel_class) {
    FlagRoundtripReport r = flag_roundtrip_check(bell_example());
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.shared_randomness_free);
    FlagConstruction corr = bell_example();
    corr.dist = Eigen::MatrixXd::Identity(2, 2) * 0.5;
    FlagRoundtripReport c = flag_roundtrip_check(corr);
    EXPECT_TRUE(c.passed);
    EXPECT_FALSE(c.shared_randomness_free);
}

TEST(flag_roundtrip, corrupted_undo_fails) {
    FlagConstruction fc = bell_example();
    FlagRoundtripReport r = flag_roundtrip_check(fc, {pauli(0), pauli(2)}, fc.unitaries_b);
    EXPECT_FALSE(r.passed);
    EXPECT_LE(r.forward_error, 1e-12);
    EXPECT_GT(r.backward_error, 0.1);
}

TEST(flag_roundtrip, random_constructions) {
    Rng rng = make_rng(42);
    std::uniform_int_distribution<int> flags(1, 3);
    for (int t = 0; t < 5; ++t) {
        int ma = flags(rng);
        int mb = flags(rng);
        Eigen::MatrixXd p = Eigen::MatrixXd::Random(ma, mb).cwiseAbs();
        p /= p.sum();
        std::vector<Eigen::MatrixXcd> ua, ub;
        for (int i = 0; i < ma; ++i) ua.push_back(random_unitary(3, rng));
        for (int j = 0; j < mb; ++j) ub.push_back(random_unitary(2, rng));
        FlagConstruction fc{random_pure_state({3, 2}, rng), p, ua, ub};
        EXPECT_TRUE(flag_roundtrip_check(fc).passed);
        Eigen::MatrixXcd direct = oracle::flag_state_direct(fc.base_state.amplitudes(), 3, 2, p, ua, ub);
        EXPECT_LT(max_entry_distance(flag_mixed_state(fc).matrix(), direct), 1e-14);
    }
}
