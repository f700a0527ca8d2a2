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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "losr/tolerances.h"

namespace losr {

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("a spectrum needs at least one entry");
    }
    double eps = tolerances().eps_norm;
    double sum = 0.0;
    for (double &v : values_) {
        if (!std::isfinite(v) || v < -eps) {
            throw std::invalid_argument("spectrum entries must be nonnegative");
        }
        v = std::max(v, 0.0);
        sum += v;
    }
    if (std::abs(sum - 1.0) > eps) {
        std::ostringstream msg;
        msg << "spectrum entries sum to " << sum << ", expected 1";
        throw std::invalid_argument(msg.str());
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::vector<double> SchmidtSpectrum::nonzero(double tau_rank) const {
    std::vector<double> out;
    for (double v : values_) {
        if (v > tau_rank) {
            out.push_back(v);
        }
    }
    return out;
}

std::string SchmidtSpectrum::to_string() const {
    std::ostringstream out;
    out.precision(12);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) {
            out << ' ';
        }
        out << values_[i];
    }
    return out.str();
}

SchmidtSpectrum schmidt_spectrum(const PureState &psi, const Bipartition &beta) {
    if (beta.num_parties() != psi.num_parties()) {
        throw std::invalid_argument("bipartition does not match the number of parties");
    }
    std::vector<int> order = beta.left();
    auto right = beta.right();
    order.insert(order.end(), right.begin(), right.end());
    PureState arranged = permute_parties(psi, order);

    std::size_t left_dim = 1;
    for (int p : beta.left()) {
        left_dim *= static_cast<std::size_t>(psi.dims()[p]);
    }
    std::size_t right_dim = psi.dimension() / left_dim;
    // Row-major amplitudes: index = l * right_dim + r.
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> coeffs(
        arranged.amplitudes().data(), static_cast<Eigen::Index>(left_dim), static_cast<Eigen::Index>(right_dim));
    Eigen::MatrixXcd reduced = left_dim <= right_dim ? Eigen::MatrixXcd(coeffs * coeffs.adjoint())
                                                     : Eigen::MatrixXcd(coeffs.adjoint() * coeffs);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    for (double &v : values) {
        v = std::max(v, 0.0);
    }
    return SchmidtSpectrum(std::move(values));
}

std::size_t schmidt_rank(const SchmidtSpectrum &spectrum, double tau_rank) {
    if (!(tau_rank > 0.0)) {
        throw std::invalid_argument("tau_rank must be positive");
    }
    return static_cast<std::size_t>(
        std::count_if(spectrum.values().begin(), spectrum.values().end(), [&](double v) { return v > tau_rank; }));
}

SchmidtSpectrum tensor(const SchmidtSpectrum &a, const SchmidtSpectrum &b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a.values()) {
        for (double y : b.values()) {
            out.push_back(x * y);
        }
    }
    return SchmidtSpectrum(std::move(out));
}

PureState schmidt_form_state(const SchmidtSpectrum &spectrum) {
    auto d = static_cast<Eigen::Index>(spectrum.size());
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        amps(i * d + i) = std::sqrt(spectrum[static_cast<std::size_t>(i)]);
    }
    return PureState({static_cast<int>(d), static_cast<int>(d)}, std::move(amps));
}

}  // namespace losr
