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

#include "losr/quantum/channel.h"

#include <cmath>
#include <stdexcept>

#include "losr/quantum/linalg.h"
#include "losr/tolerances.h"

namespace losr {

LocalChannel LocalChannel::identity(int dim) {
    return LocalChannel{{Eigen::MatrixXcd::Identity(dim, dim)}};
}

LocalChannel LocalChannel::depolarizing(int dim) {
    LocalChannel out;
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
            k(i, j) = scale;
            out.kraus.push_back(std::move(k));
        }
    }
    return out;
}

LocalChannel LocalChannel::unitary(const Eigen::MatrixXcd &u) {
    return LocalChannel{{u}};
}

int LocalChannel::input_dim() const {
    return kraus.empty() ? 0 : static_cast<int>(kraus.front().cols());
}

int LocalChannel::output_dim() const {
    return kraus.empty() ? 0 : static_cast<int>(kraus.front().rows());
}

double LocalChannel::completeness_defect() const {
    if (kraus.empty()) {
        return 1e300;
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(input_dim(), input_dim());
    for (const auto &k : kraus) {
        if (k.rows() != output_dim() || k.cols() != input_dim()) {
            return 1e300;
        }
        sum += k.adjoint() * k;
    }
    return (sum - Eigen::MatrixXcd::Identity(input_dim(), input_dim())).cwiseAbs().maxCoeff();
}

LocalChannelFamily::LocalChannelFamily(std::vector<double> weights, std::vector<ProductChannel> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
    if (components_.empty() || weights_.size() != components_.size()) {
        throw std::invalid_argument("channel family needs one weight per component");
    }
    double eps = tolerances().eps_norm;
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("channel weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > eps) {
        throw std::invalid_argument("channel weights must sum to 1");
    }
    std::size_t n = components_.front().parties.size();
    if (n == 0) {
        throw std::invalid_argument("channel family needs at least one party");
    }
    for (const auto &c : components_) {
        if (c.parties.size() != n) {
            throw std::invalid_argument("channel components act on different numbers of parties");
        }
        for (std::size_t k = 0; k < n; ++k) {
            const auto &local = c.parties[k];
            if (local.completeness_defect() > eps) {
                throw std::invalid_argument("Kraus operators are not complete for party " + party_label(static_cast<int>(k)));
            }
            const auto &ref = components_.front().parties[k];
            if (local.input_dim() != ref.input_dim() || local.output_dim() != ref.output_dim()) {
                throw std::invalid_argument("channel components disagree on party dimensions");
            }
        }
    }
}

LocalChannelFamily LocalChannelFamily::single(ProductChannel channel) {
    return LocalChannelFamily({1.0}, {std::move(channel)});
}

PartyDims LocalChannelFamily::input_dims() const {
    PartyDims out;
    for (const auto &p : components_.front().parties) {
        out.push_back(p.input_dim());
    }
    return out;
}

PartyDims LocalChannelFamily::output_dims() const {
    PartyDims out;
    for (const auto &p : components_.front().parties) {
        out.push_back(p.output_dim());
    }
    return out;
}

namespace {

Eigen::MatrixXcd embed(const Eigen::MatrixXcd &op, const PartyDims &dims, std::size_t party) {
    int pre = 1;
    int post = 1;
    for (std::size_t k = 0; k < party; ++k) {
        pre *= dims[k];
    }
    for (std::size_t k = party + 1; k < dims.size(); ++k) {
        post *= dims[k];
    }
    return kron(kron(Eigen::MatrixXcd::Identity(pre, pre), op), Eigen::MatrixXcd::Identity(post, post));
}

}  // namespace

DensityMatrix apply_channel(const DensityMatrix &rho, const LocalChannelFamily &channel) {
    if (rho.dims() != channel.input_dims()) {
        throw std::invalid_argument("channel dimensions do not match the state");
    }
    PartyDims out_dims = channel.output_dims();
    std::size_t out_total = total_dimension(out_dims);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_total, out_total);
    for (std::size_t c = 0; c < channel.components().size(); ++c) {
        double w = channel.weights()[c];
        if (w == 0.0) {
            continue;
        }
        // Parties before `k` already carry their output dimension.
        Eigen::MatrixXcd current = rho.matrix();
        PartyDims dims = rho.dims();
        const auto &comp = channel.components()[c];
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const auto &local = comp.parties[k];
            PartyDims in_layout = dims;
            Eigen::MatrixXcd next;
            for (const auto &kraus : local.kraus) {
                Eigen::MatrixXcd full = embed(kraus, in_layout, k);
                Eigen::MatrixXcd term = full * current * full.adjoint();
                if (next.size() == 0) {
                    next = std::move(term);
                } else {
                    next += term;
                }
            }
            current = std::move(next);
            dims[k] = local.output_dim();
        }
        out += w * current;
    }
    // Hermitian up to rounding; symmetrize so downstream eigensolvers see an
    // exactly Hermitian matrix.
    Eigen::MatrixXcd herm = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(out_dims), std::move(herm));
}

}  // namespace losr
