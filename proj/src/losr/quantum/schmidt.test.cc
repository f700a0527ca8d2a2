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

#include "losr/quantum/schmidt.h"

#include <cmath>
#include <gtest/gtest.h>

#include "losr/quantum/catalog.h"
#include "losr/quantum/random.h"

using namespace losr;

namespace {

void expect_spectrum(const SchmidtSpectrum &s, const std::vector<double> &want, double tol) {
    auto got = s.nonzero(1e-10);
    ASSERT_EQ(got.size(), want.size()) << s.to_string();
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(got[i], want[i], tol);
    }
}

PureState product_unitary(const PureState &psi, Rng &rng) {
    Eigen::MatrixXcd u = random_unitary(psi.dims()[0], rng);
    for (std::size_t k = 1; k < psi.num_parties(); ++k) {
        Eigen::MatrixXcd v = random_unitary(psi.dims()[k], rng);
        Eigen::MatrixXcd w(u.rows() * v.rows(), u.cols() * v.cols());
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < u.cols(); ++j)
                w.block(i * v.rows(), j * v.cols(), v.rows(), v.cols()) = u(i, j) * v;
        u = w;
    }
    return PureState(psi.dims(), u * psi.amplitudes());
}

}  // namespace

TEST(schmidt, bell_and_product) {
    expect_spectrum(schmidt_spectrum(catalog::phi_plus(), Bipartition({0}, 2)), {0.5, 0.5}, 1e-12);
    expect_spectrum(schmidt_spectrum(catalog::product(), Bipartition({0}, 2)), {1.0}, 1e-12);
    expect_spectrum(schmidt_spectrum(catalog::max_entangled(3), Bipartition({0}, 2)), {1 / 3.0, 1 / 3.0, 1 / 3.0},
                    1e-12);
}

TEST(schmidt, two_bell_and_ghz_table) {
    PureState tb = catalog::two_bell();
    PureState g = catalog::ghz();
    expect_spectrum(schmidt_spectrum(tb, Bipartition::parse("A|BC")), {0.25, 0.25, 0.25, 0.25}, 1e-12);
    expect_spectrum(schmidt_spectrum(tb, Bipartition::parse("B|AC")), {0.5, 0.5}, 1e-12);
    expect_spectrum(schmidt_spectrum(tb, Bipartition::parse("C|AB")), {0.5, 0.5}, 1e-12);
    for (const auto &b : Bipartition::all(3)) {
        expect_spectrum(schmidt_spectrum(g, b), {0.5, 0.5}, 1e-12);
    }
}

TEST(schmidt, chiral_spectra) {
    double d = std::sqrt(5.0 / 32.0);
    for (const auto &b : Bipartition::all(3)) {
        expect_spectrum(schmidt_spectrum(catalog::chiral(), b), {0.5 + d, 0.5 - d}, 1e-12);
    }
}

TEST(schmidt, invariant_under_local_unitaries_and_sides) {
    Rng rng = make_rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        PureState psi = random_pure_state({2, 3, 2}, rng);
        PureState rotated = product_unitary(psi, rng);
        for (const auto &b : Bipartition::all(3)) {
            auto x = schmidt_spectrum(psi, b);
            auto y = schmidt_spectrum(rotated, b);
            auto z = schmidt_spectrum(psi, b.complement());
            ASSERT_EQ(x.size(), y.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                EXPECT_NEAR(x[i], y[i], 1e-12);
                EXPECT_NEAR(x[i], z[i], 1e-12);
            }
        }
    }
}

TEST(schmidt, tensor_product_multiplies_spectra) {
    Rng rng = make_rng(12);
    PureState a = random_pure_state({2, 3}, rng);
    PureState b = random_pure_state({2, 2}, rng);
    // (A1 B1) x (A2 B2) -> parties A1 A2 | B1 B2 after reordering.
    PureState joint = permute_parties(tensor_product(a, b), {0, 2, 1, 3});
    auto s = schmidt_spectrum(joint, Bipartition({0, 1}, 4));
    auto t = tensor(schmidt_spectrum(a, Bipartition({0}, 2)), schmidt_spectrum(b, Bipartition({0}, 2)));
    ASSERT_EQ(s.size(), t.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NEAR(s[i], t[i], 1e-12);
    }
}

TEST(schmidt, rank_and_validation) {
    SchmidtSpectrum s({0.5, 0.5, 0.0});
    EXPECT_EQ(schmidt_rank(s, 1e-10), 2u);
    EXPECT_THROW(schmidt_rank(s, 0.0), std::invalid_argument);
    EXPECT_THROW(SchmidtSpectrum({0.5, 0.4}), std::invalid_argument);
    EXPECT_THROW(SchmidtSpectrum({1.2, -0.2}), std::invalid_argument);
    EXPECT_EQ(SchmidtSpectrum({0.25, 0.75}).to_string(), "0.75 0.25");
    PureState form = schmidt_form_state(SchmidtSpectrum({0.7, 0.3}));
    auto back = schmidt_spectrum(form, Bipartition({0}, 2));
    EXPECT_NEAR(back[0], 0.7, 1e-14);
}
