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

#include "losr/quantum/state.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "losr/quantum/index.h"
#include "losr/quantum/linalg.h"
#include "losr/tolerances.h"
#include "losr/warnings.h"

namespace losr {

std::size_t total_dimension(const PartyDims &dims) {
    std::size_t total = 1;
    for (int d : dims) {
        if (d <= 0) {
            throw std::invalid_argument("party dimensions must be positive");
        }
        total *= static_cast<std::size_t>(d);
        if (total > kMaxTotalDimension) {
            throw std::invalid_argument(
                "total dimension exceeds " + std::to_string(kMaxTotalDimension));
        }
    }
    return total;
}

PureState::PureState(PartyDims dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (dims_.empty()) {
        throw std::invalid_argument("a state needs at least one party");
    }
    std::size_t expected = total_dimension(dims_);
    if (static_cast<std::size_t>(amplitudes_.size()) != expected) {
        std::ostringstream msg;
        msg << "amplitude count " << amplitudes_.size() << " does not match dimension " << expected;
        throw std::invalid_argument(msg.str());
    }
    double norm = amplitudes_.norm();
    double deviation = std::abs(norm * norm - 1.0);
    if (deviation > tolerances().eps_norm) {
        if (deviation >= kAutoNormalizeLimit || norm == 0.0) {
            std::ostringstream msg;
            msg << "state is not normalized (squared norm " << norm * norm << ")";
            throw std::invalid_argument(msg.str());
        }
        std::ostringstream msg;
        msg << "rescaling state with squared norm " << norm * norm;
        warn(msg.str());
        amplitudes_ /= norm;
    }
}

DensityMatrix::DensityMatrix(PartyDims dims, Eigen::MatrixXcd matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (dims_.empty()) {
        throw std::invalid_argument("a state needs at least one party");
    }
    std::size_t expected = total_dimension(dims_);
    if (static_cast<std::size_t>(matrix_.rows()) != expected ||
        static_cast<std::size_t>(matrix_.cols()) != expected) {
        throw std::invalid_argument("density matrix shape does not match party dimensions");
    }
    double eps = tolerances().eps_norm;
    double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > eps) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    Complex trace = matrix_.trace();
    if (std::abs(trace - Complex(1.0)) > eps) {
        std::ostringstream msg;
        msg << "density matrix trace is " << trace.real() << ", expected 1";
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -eps) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    const auto &v = psi.amplitudes();
    return DensityMatrix(psi.dims(), v * v.adjoint());
}

Bipartition::Bipartition(std::vector<int> left, std::size_t num_parties)
    : left_(std::move(left)), num_parties_(num_parties) {
    std::sort(left_.begin(), left_.end());
    if (left_.empty() || left_.size() >= num_parties_) {
        throw std::invalid_argument("a bipartition needs a nonempty proper subset on the left");
    }
    if (std::adjacent_find(left_.begin(), left_.end()) != left_.end()) {
        throw std::invalid_argument("bipartition lists a party twice");
    }
    if (left_.front() < 0 || static_cast<std::size_t>(left_.back()) >= num_parties_) {
        throw std::invalid_argument("bipartition refers to a party that does not exist");
    }
}

Bipartition Bipartition::parse(const std::string &label) {
    auto bar = label.find('|');
    if (bar == std::string::npos || label.find('|', bar + 1) != std::string::npos) {
        throw std::invalid_argument("bipartition must look like A|BC, got '" + label + "'");
    }
    std::vector<int> left;
    std::vector<int> seen;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i == bar) {
            continue;
        }
        char c = label[i];
        if (c < 'A' || c > 'Z') {
            throw std::invalid_argument("bipartition parties are letters A-Z, got '" + label + "'");
        }
        int party = c - 'A';
        seen.push_back(party);
        if (i < bar) {
            left.push_back(party);
        }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (seen[k] != static_cast<int>(k)) {
            throw std::invalid_argument("bipartition must name every party exactly once: '" + label + "'");
        }
    }
    return Bipartition(std::move(left), seen.size());
}

std::vector<Bipartition> Bipartition::all(std::size_t num_parties) {
    if (num_parties < 2 || num_parties > 20) {
        throw std::invalid_argument("bipartitions need between 2 and 20 parties");
    }
    std::vector<std::vector<int>> subsets;
    std::size_t n = num_parties;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (2 * size > n) {
            continue;
        }
        if (2 * size == n && !(mask & 1)) {
            continue;
        }
        std::vector<int> left;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::size_t{1} << k)) {
                left.push_back(static_cast<int>(k));
            }
        }
        subsets.push_back(std::move(left));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    std::vector<Bipartition> out;
    out.reserve(subsets.size());
    for (auto &s : subsets) {
        out.emplace_back(std::move(s), n);
    }
    return out;
}

std::vector<int> Bipartition::right() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < num_parties_; ++k) {
        if (!std::binary_search(left_.begin(), left_.end(), static_cast<int>(k))) {
            out.push_back(static_cast<int>(k));
        }
    }
    return out;
}

Bipartition Bipartition::complement() const {
    return Bipartition(right(), num_parties_);
}

std::string Bipartition::label() const {
    std::string out;
    for (int p : left_) {
        out += party_label(p);
    }
    out += '|';
    for (int p : right()) {
        out += party_label(p);
    }
    return out;
}

std::string party_label(int party) {
    if (party >= 0 && party < 26) {
        return std::string(1, static_cast<char>('A' + party));
    }
    return "P" + std::to_string(party);
}

namespace {

PartyDims concat(const PartyDims &a, const PartyDims &b) {
    PartyDims out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void check_order(const std::vector<int> &order, std::size_t n) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) {
        throw std::invalid_argument("party order must be a permutation of all parties");
    }
}

// Maps each index of the permuted layout to its index in the original layout.
std::vector<std::size_t> permutation_map(const PartyDims &dims, const std::vector<int> &order) {
    check_order(order, dims.size());
    PartyDims new_dims(order.size());
    auto old_strides = index::strides(dims);
    for (std::size_t k = 0; k < order.size(); ++k) {
        new_dims[k] = dims[order[k]];
    }
    std::vector<std::size_t> part_strides(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        part_strides[k] = old_strides[order[k]];
    }
    return index::offsets(new_dims, part_strides);
}

void check_merge(const PartyDims &dims, std::size_t first, std::size_t count) {
    if (count == 0 || first + count > dims.size()) {
        throw std::invalid_argument("merge range is outside the party list");
    }
}

PartyDims merged_dims(const PartyDims &dims, std::size_t first, std::size_t count) {
    check_merge(dims, first, count);
    PartyDims out(dims.begin(), dims.begin() + first);
    int fused = 1;
    for (std::size_t k = first; k < first + count; ++k) {
        fused *= dims[k];
    }
    out.push_back(fused);
    out.insert(out.end(), dims.begin() + first + count, dims.end());
    return out;
}

}  // namespace

PureState tensor_product(const PureState &a, const PureState &b) {
    const auto &va = a.amplitudes();
    const auto &vb = b.amplitudes();
    Eigen::VectorXcd out(va.size() * vb.size());
    for (Eigen::Index i = 0; i < va.size(); ++i) {
        out.segment(i * vb.size(), vb.size()) = va(i) * vb;
    }
    return PureState(concat(a.dims(), b.dims()), std::move(out));
}

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(concat(a.dims(), b.dims()), kron(a.matrix(), b.matrix()));
}

PureState permute_parties(const PureState &psi, const std::vector<int> &order) {
    auto map = permutation_map(psi.dims(), order);
    Eigen::VectorXcd out(psi.amplitudes().size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = psi.amplitudes()(static_cast<Eigen::Index>(map[i]));
    }
    PartyDims dims(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        dims[k] = psi.dims()[order[k]];
    }
    return PureState(std::move(dims), std::move(out));
}

DensityMatrix permute_parties(const DensityMatrix &rho, const std::vector<int> &order) {
    auto map = permutation_map(rho.dims(), order);
    auto n = static_cast<Eigen::Index>(map.size());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = rho.matrix()(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j]));
        }
    }
    PartyDims dims(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        dims[k] = rho.dims()[order[k]];
    }
    return DensityMatrix(std::move(dims), std::move(out));
}

PureState merge_parties(const PureState &psi, std::size_t first, std::size_t count) {
    return PureState(merged_dims(psi.dims(), first, count), psi.amplitudes());
}

DensityMatrix merge_parties(const DensityMatrix &rho, std::size_t first, std::size_t count) {
    return DensityMatrix(merged_dims(rho.dims(), first, count), rho.matrix());
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial trace must keep at least one party");
    }
    const auto &dims = rho.dims();
    std::vector<bool> kept(dims.size(), false);
    for (int p : keep) {
        if (p < 0 || static_cast<std::size_t>(p) >= dims.size() || kept[p]) {
            throw std::invalid_argument("partial trace keep set is invalid");
        }
        kept[p] = true;
    }
    std::vector<int> rest;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (!kept[k]) {
            rest.push_back(static_cast<int>(k));
        }
    }
    auto strides = index::strides(dims);
    auto sub = [&](const std::vector<int> &parties) {
        PartyDims d;
        std::vector<std::size_t> s;
        for (int p : parties) {
            d.push_back(dims[p]);
            s.push_back(strides[p]);
        }
        return std::make_pair(d, index::offsets(d, s));
    };
    auto [keep_dims, keep_off] = sub(keep);
    auto [rest_dims, rest_off] = sub(rest);
    if (rest.empty()) {
        rest_off = {0};
    }
    auto n = static_cast<Eigen::Index>(keep_off.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    const auto &m = rho.matrix();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t e : rest_off) {
                acc += m(static_cast<Eigen::Index>(keep_off[i] + e), static_cast<Eigen::Index>(keep_off[j] + e));
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(std::move(keep_dims), std::move(out));
}

PureState conjugate(const PureState &psi) {
    return PureState(psi.dims(), psi.amplitudes().conjugate());
}

PureState with_global_phase(const PureState &psi, double phase) {
    return PureState(psi.dims(), std::polar(1.0, phase) * psi.amplitudes());
}

double max_entry_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace losr
