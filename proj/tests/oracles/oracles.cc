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

#include "oracles.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace losr::oracle {

namespace {

using C = std::complex<double>;
using V2 = Eigen::Vector2cd;

V2 perp(const V2 &v) {
    return V2(-std::conj(v(1)), std::conj(v(0)));
}

V2 bloch_ket(const Eigen::Vector3d &n) {
    double polar = std::acos(std::max(-1.0, std::min(1.0, n.z())));
    double az = std::atan2(n.y(), n.x());
    return V2(std::cos(polar / 2), std::polar(std::sin(polar / 2), az));
}

std::array<Eigen::Matrix2cd, 4> paulis() {
    Eigen::Matrix2cd i = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd x, y, z;
    x << 0, 1, 1, 0;
    y << 0, C(0, -1), C(0, 1), 0;
    z << 1, 0, 0, -1;
    return {i, x, y, z};
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

BruteFactor brute_force_factor(const std::vector<double> &psi, const std::vector<double> &phi, double eps) {
    BruteFactor out;
    std::size_t n = psi.size();
    std::size_t m = phi.size();
    if (m == 0 || n % m != 0) {
        return out;
    }
    std::size_t k = n / m;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double phi_sq = 0.0;
    for (double x : phi) {
        phi_sq += x * x;
    }
    do {
        std::vector<double> zeta(k);
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
            double num = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                num += phi[i] * psi[perm[j * m + i]];
            }
            zeta[j] = num / phi_sq;
            for (std::size_t i = 0; i < m; ++i) {
                double x = phi[i] * zeta[j];
                double y = psi[perm[j * m + i]];
                if (std::abs(x - y) > eps * std::max(std::abs(x), std::abs(y))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            double total = std::accumulate(zeta.begin(), zeta.end(), 0.0);
            for (double &z : zeta) {
                z /= total;
            }
            std::sort(zeta.rbegin(), zeta.rend());
            out.found = true;
            out.zeta = zeta;
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool majorized_by(const std::vector<double> &from, const std::vector<double> &to) {
    std::vector<double> a = from;
    std::vector<double> b = to;
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0.0);
    b.resize(len, 0.0);
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb + 1e-12) {
            return false;
        }
    }
    return true;
}

double hardy_eliminated(double theta, const Eigen::Vector3d &a1_dir) {
    // M(a, b) = <ab|psi>; <a, b|psi> = a^+ M conj(b).
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::cos(theta);
    m(1, 1) = std::sin(theta);
    auto bob_given = [&](const V2 &a) -> V2 { return m.transpose() * a.conjugate(); };
    auto alice_given = [&](const V2 &b) -> V2 { return m * b.conjugate(); };
    constexpr double kTiny = 1e-12;

    V2 a1 = bloch_ket(a1_dir);
    // p(11|11) = 0 puts Bob's second +1 state along his conditional state.
    V2 phi = bob_given(perp(a1));
    if (phi.norm() < kTiny) {
        return 0.0;
    }
    V2 b1 = phi.normalized();
    // p(00|01) = 0.
    V2 chi = alice_given(b1);
    if (chi.norm() < kTiny) {
        return 0.0;
    }
    V2 a0 = perp(chi.normalized());
    // p(00|10) = 0.
    V2 eta = bob_given(a1);
    if (eta.norm() < kTiny) {
        return 0.0;
    }
    V2 b0 = perp(eta.normalized());
    C amp = a0.adjoint() * m * b0.conjugate();
    return std::norm(amp);
}

double hardy_grid_max(double theta, int polar_steps, int azimuth_steps) {
    double best = 0.0;
    for (int i = 0; i <= polar_steps; ++i) {
        double polar = M_PI * i / polar_steps;
        for (int j = 0; j < azimuth_steps; ++j) {
            double az = 2.0 * M_PI * j / azimuth_steps;
            Eigen::Vector3d n(std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az), std::cos(polar));
            best = std::max(best, hardy_eliminated(theta, n));
        }
    }
    return best;
}

double chsh_partial_closed_form(double theta) {
    double s = std::sin(2.0 * theta);
    return 2.0 * std::sqrt(1.0 + s * s);
}

Eigen::Matrix3d correlation_matrix_direct(const Eigen::Matrix4cd &rho) {
    auto p = paulis();
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Eigen::MatrixXcd op = kron(p[static_cast<std::size_t>(i + 1)], p[static_cast<std::size_t>(j + 1)]);
            t(i, j) = (rho * op).trace().real();
        }
    }
    return t;
}

Eigen::MatrixXcd flag_state_direct(const Eigen::VectorXcd &psi, int da, int db, const Eigen::MatrixXd &p,
                                   const std::vector<Eigen::MatrixXcd> &ua,
                                   const std::vector<Eigen::MatrixXcd> &ub) {
    int ma = static_cast<int>(ua.size());
    int mb = static_cast<int>(ub.size());
    int dim = da * db * ma * mb;
    Eigen::MatrixXcd abff = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd proj = psi * psi.adjoint();
    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            Eigen::MatrixXcd u = kron(ua[static_cast<std::size_t>(i)], ub[static_cast<std::size_t>(j)]);
            Eigen::MatrixXcd fi = Eigen::MatrixXcd::Zero(ma, ma);
            fi(i, i) = 1.0;
            Eigen::MatrixXcd fj = Eigen::MatrixXcd::Zero(mb, mb);
            fj(j, j) = 1.0;
            abff += p(i, j) * kron(kron(u * proj * u.adjoint(), fi), fj);
        }
    }
    // Reindex (a, b, i, j) -> (a, i, b, j).
    auto old_index = [&](int a, int b, int i, int j) { return ((a * db + b) * ma + i) * mb + j; };
    auto new_index = [&](int a, int b, int i, int j) { return ((a * ma + i) * db + b) * mb + j; };
    Eigen::MatrixXcd out(dim, dim);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int i = 0; i < ma; ++i)
                for (int j = 0; j < mb; ++j)
                    for (int a2 = 0; a2 < da; ++a2)
                        for (int b2 = 0; b2 < db; ++b2)
                            for (int i2 = 0; i2 < ma; ++i2)
                                for (int j2 = 0; j2 < mb; ++j2)
                                    out(new_index(a, b, i, j), new_index(a2, b2, i2, j2)) =
                                        abff(old_index(a, b, i, j), old_index(a2, b2, i2, j2));
    return out;
}

bool ppt_two_qubits(const Eigen::Matrix4cd &rho, double tol) {
    Eigen::Matrix4cd pt;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    pt(a * 2 + b, a2 * 2 + b2) = rho(a * 2 + b2, a2 * 2 + b);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace losr::oracle
