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

#include <cmath>
#include <stdexcept>

#include "losr/quantum/linalg.h"

namespace losr {

namespace {

Eigen::MatrixXcd basis_column(int dim, int i) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(dim, 1);
    e(i, 0) = 1.0;
    return e;
}

void check_unitaries(const std::vector<Eigen::MatrixXcd> &us, int dim, const char *side) {
    if (us.empty()) {
        throw std::invalid_argument(std::string("flag construction needs at least one unitary for ") + side);
    }
    for (const auto &u : us) {
        if (u.rows() != dim || u.cols() != dim) {
            throw std::invalid_argument(std::string("unitary size does not match party ") + side);
        }
        if (unitarity_defect(u) > 1e-12) {
            throw std::invalid_argument(std::string("non-unitary matrix for party ") + side);
        }
    }
}

// Kraus operator U x |i> (output ordered system then flag).
Eigen::MatrixXcd controlled(const Eigen::MatrixXcd &u, int flags, int i) {
    return kron(u, basis_column(flags, i));
}

LocalChannel flag_preparation(const std::vector<Eigen::MatrixXcd> &us, const Eigen::VectorXd &weights) {
    LocalChannel ch;
    int m = static_cast<int>(us.size());
    for (int i = 0; i < m; ++i) {
        if (weights(i) > 0.0) {
            ch.kraus.push_back(std::sqrt(weights(i)) * controlled(us[static_cast<std::size_t>(i)], m, i));
        }
    }
    return ch;
}

LocalChannel flag_undo(const std::vector<Eigen::MatrixXcd> &us) {
    LocalChannel ch;
    int m = static_cast<int>(us.size());
    for (int i = 0; i < m; ++i) {
        ch.kraus.push_back(kron(us[static_cast<std::size_t>(i)].adjoint(), basis_column(m, i).transpose()));
    }
    return ch;
}

}  // namespace

void FlagConstruction::validate() const {
    if (base_state.num_parties() != 2) {
        throw std::invalid_argument("flag construction needs a bipartite base state");
    }
    check_unitaries(unitaries_a, base_state.dims()[0], "A");
    check_unitaries(unitaries_b, base_state.dims()[1], "B");
    if (dist.rows() != flag_dim_a() || dist.cols() != flag_dim_b()) {
        throw std::invalid_argument("flag distribution shape must match the unitary counts");
    }
    if (dist.minCoeff() < 0.0 || std::abs(dist.sum() - 1.0) > 1e-12) {
        throw std::invalid_argument("flag distribution must be nonnegative and sum to 1");
    }
}

bool FlagConstruction::factorizes(double eps) const {
    Eigen::VectorXd pa = dist.rowwise().sum();
    Eigen::RowVectorXd pb = dist.colwise().sum();
    return (dist - pa * pb).cwiseAbs().maxCoeff() <= eps;
}

DensityMatrix flag_mixed_state(const FlagConstruction &fc) {
    fc.validate();
    int da = fc.base_state.dims()[0];
    int db = fc.base_state.dims()[1];
    int ma = fc.flag_dim_a();
    int mb = fc.flag_dim_b();
    // psi as a da x db coefficient matrix; (U x V) psi is then U M V^T.
    Eigen::MatrixXcd m(da, db);
    for (int a = 0; a < da; ++a) {
        for (int b = 0; b < db; ++b) {
            m(a, b) = fc.base_state.amplitudes()(a * db + b);
        }
    }
    int dim = da * ma * db * mb;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            double p = fc.dist(i, j);
            if (p == 0.0) {
                continue;
            }
            Eigen::MatrixXcd rotated =
                fc.unitaries_a[static_cast<std::size_t>(i)] * m * fc.unitaries_b[static_cast<std::size_t>(j)].transpose();
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            for (int a = 0; a < da; ++a) {
                for (int b = 0; b < db; ++b) {
                    v((a * ma + i) * db * mb + b * mb + j) = rotated(a, b);
                }
            }
            rho += p * v * v.adjoint();
        }
    }
    return DensityMatrix({da * ma, db * mb}, rho);
}

LocalChannelFamily flag_forward_channel(const FlagConstruction &fc) {
    fc.validate();
    if (fc.factorizes()) {
        ProductChannel pc;
        pc.parties.push_back(flag_preparation(fc.unitaries_a, fc.dist.rowwise().sum()));
        pc.parties.push_back(flag_preparation(fc.unitaries_b, fc.dist.colwise().sum().transpose()));
        return LocalChannelFamily::single(std::move(pc));
    }
    std::vector<double> weights;
    std::vector<ProductChannel> parts;
    for (int i = 0; i < fc.flag_dim_a(); ++i) {
        for (int j = 0; j < fc.flag_dim_b(); ++j) {
            if (fc.dist(i, j) <= 0.0) {
                continue;
            }
            weights.push_back(fc.dist(i, j));
            ProductChannel pc;
            pc.parties.push_back(
                LocalChannel{{controlled(fc.unitaries_a[static_cast<std::size_t>(i)], fc.flag_dim_a(), i)}});
            pc.parties.push_back(
                LocalChannel{{controlled(fc.unitaries_b[static_cast<std::size_t>(j)], fc.flag_dim_b(), j)}});
            parts.push_back(std::move(pc));
        }
    }
    return LocalChannelFamily(std::move(weights), std::move(parts));
}

LocalChannelFamily flag_backward_channel(const std::vector<Eigen::MatrixXcd> &unitaries_a,
                                         const std::vector<Eigen::MatrixXcd> &unitaries_b) {
    ProductChannel pc;
    pc.parties.push_back(flag_undo(unitaries_a));
    pc.parties.push_back(flag_undo(unitaries_b));
    return LocalChannelFamily::single(std::move(pc));
}

FlagRoundtripReport flag_roundtrip_check(const FlagConstruction &fc) {
    return flag_roundtrip_check(fc, fc.unitaries_a, fc.unitaries_b);
}

FlagRoundtripReport flag_roundtrip_check(const FlagConstruction &fc,
                                         const std::vector<Eigen::MatrixXcd> &backward_a,
                                         const std::vector<Eigen::MatrixXcd> &backward_b) {
    DensityMatrix rho = flag_mixed_state(fc);
    DensityMatrix psi = DensityMatrix::from_pure(fc.base_state);
    LocalChannelFamily forward = flag_forward_channel(fc);
    check_unitaries(backward_a, fc.base_state.dims()[0], "A");
    check_unitaries(backward_b, fc.base_state.dims()[1], "B");
    if (backward_a.size() != fc.unitaries_a.size() || backward_b.size() != fc.unitaries_b.size()) {
        throw std::invalid_argument("backward unitaries must match the flag dimensions");
    }
    LocalChannelFamily backward = flag_backward_channel(backward_a, backward_b);

    FlagRoundtripReport report;
    report.shared_randomness_free = !forward.uses_shared_randomness();
    report.forward_error = max_entry_distance(apply_channel(psi, forward).matrix(), rho.matrix());
    report.backward_error = max_entry_distance(apply_channel(rho, backward).matrix(), psi.matrix());
    report.passed =
        report.forward_error <= kFlagRoundtripTolerance && report.backward_error <= kFlagRoundtripTolerance;
    return report;
}

}  // namespace losr
