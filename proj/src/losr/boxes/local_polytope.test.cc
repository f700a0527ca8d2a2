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

#include "losr/boxes/local_polytope.h"

#include <gtest/gtest.h>

#include "losr/boxes/functional.h"
#include "losr/boxes/simplex.h"

using namespace losr;

TEST(simplex, small_programs) {
    // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
    Eigen::MatrixXd a(2, 4);
    a << 1, 2, 1, 0, 3, 1, 0, 1;
    Eigen::VectorXd b(2);
    b << 4, 6;
    Eigen::VectorXd c(4);
    c << -1, -1, 0, 0;
    lp::Result r = lp::solve_standard_form(a, b, c);
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_NEAR(r.x(0), 1.6, 1e-12);
    EXPECT_NEAR(r.x(1), 1.2, 1e-12);
    EXPECT_NEAR(r.objective, -2.8, 1e-12);

    // x1 + x2 = -1 has no nonnegative solution.
    Eigen::MatrixXd a2(1, 2);
    a2 << 1, 1;
    Eigen::VectorXd b2(1);
    b2 << -1;
    lp::Result inf = lp::solve_standard_form(a2, b2, Eigen::VectorXd::Zero(2));
    ASSERT_EQ(inf.status, lp::Status::Infeasible);
    EXPECT_LE((inf.farkas.transpose() * a2).maxCoeff(), 1e-12);
    EXPECT_GT(inf.farkas.dot(b2), 0.0);

    // min -x s.t. x - y = 0.
    Eigen::MatrixXd a3(1, 2);
    a3 << 1, -1;
    Eigen::VectorXd c3(2);
    c3 << -1, 0;
    EXPECT_EQ(lp::solve_standard_form(a3, Eigen::VectorXd::Zero(1), c3).status, lp::Status::Unbounded);
}

TEST(simplex, redundant_rows) {
    Eigen::MatrixXd a(3, 2);
    a << 1, 1, 2, 2, 1, 0;
    Eigen::VectorXd b(3);
    b << 1, 2, 0.25;
    lp::Result r = lp::solve_standard_form(a, b, Eigen::VectorXd::Zero(2));
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_NEAR(r.x(0), 0.25, 1e-12);
    EXPECT_NEAR(r.x(1), 0.75, 1e-12);
}

TEST(local_polytope, vertices_respect_chsh_bound) {
    auto vertices = deterministic_vertices(Scenario::uniform(2, 2, 2));
    ASSERT_EQ(vertices.size(), 16u);
    BellFunctional f = BellFunctional::chsh();
    double best = -10;
    for (const auto &v : vertices) {
        best = std::max(best, evaluate(f, v));
    }
    EXPECT_NEAR(best, 2.0, 1e-15);
    EXPECT_EQ(deterministic_vertices(Scenario::uniform(3, 2, 2)).size(), 64u);
    EXPECT_EQ(deterministic_vertices(Scenario({3, 2}, {2, 3})).size(), 8u * 9u);
    EXPECT_THROW(deterministic_vertices(Scenario::uniform(3, 5, 4)), std::invalid_argument);
}

TEST(local_polytope, classifies_standard_boxes) {
    for (const Box &box : {pr_box(), tsirelson_box()}) {
        LocalMembership m = local_membership(box);
        ASSERT_FALSE(is_local(m));
        const auto &cert = std::get<NonlocalCertificate>(m);
        EXPECT_GT(cert.margin(), 1e-6);
        EXPECT_TRUE(verify_certificate(cert, box));
    }
    Box u = uniform_box(Scenario::uniform(2, 2, 2));
    LocalMembership m = local_membership(u);
    ASSERT_TRUE(is_local(m));
    const auto &cert = std::get<LocalCertificate>(m);
    EXPECT_NEAR(cert.min_weight, 1.0 / 16.0, 1e-12);
    EXPECT_TRUE(verify_certificate(cert, u));
}

TEST(local_polytope, boundary_and_interior_mixtures) {
    Box pr = pr_box();
    Box u = uniform_box(pr.scenario());
    // CHSH of t PR + (1-t) uniform is 4t: local iff t <= 1/2.
    EXPECT_TRUE(is_local(local_membership(u.mix(pr, 0.45))));
    EXPECT_FALSE(is_local(local_membership(u.mix(pr, 0.55))));
    auto vertices = deterministic_vertices(pr.scenario());
    LocalMembership v = local_membership(vertices[5]);
    ASSERT_TRUE(is_local(v));
    EXPECT_TRUE(verify_certificate(std::get<LocalCertificate>(v), vertices[5]));
}

TEST(local_polytope, rejects_signaling_boxes) {
    Scenario sc = Scenario::uniform(2, 2, 2);
    std::vector<double> t(16, 0.0);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            t[(x * 2 + y) * 4 + x] = 1.0;
        }
    }
    EXPECT_THROW(local_membership(Box(sc, t)), std::invalid_argument);
}

TEST(local_polytope, forged_certificates_fail) {
    Box u = uniform_box(Scenario::uniform(2, 2, 2));
    LocalCertificate bad{std::vector<double>(16, 1.0 / 16.0), 0, 0};
    bad.weights[0] += 0.01;
    bad.weights[1] -= 0.01;
    EXPECT_FALSE(verify_certificate(bad, u));
    NonlocalCertificate chsh{BellFunctional::chsh().coefficients, 1.9, 0};
    EXPECT_FALSE(verify_certificate(chsh, tsirelson_box()));
}
