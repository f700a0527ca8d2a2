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

#include "losr/quantum/catalog.h"

#include <cmath>
#include <stdexcept>

namespace losr::catalog {

PureState phi_plus() {
    return max_entangled(2);
}

PureState max_entangled(int d) {
    if (d < 1) {
        throw std::invalid_argument("Schmidt rank must be positive");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i) {
        amps(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return PureState({d, d}, std::move(amps));
}

PureState partial(double theta) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps(0) = std::cos(theta);
    amps(3) = std::sin(theta);
    return PureState({2, 2}, std::move(amps));
}

PureState ghz() {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
    amps(0) = 1.0 / std::sqrt(2.0);
    amps(7) = 1.0 / std::sqrt(2.0);
    return PureState({2, 2, 2}, std::move(amps));
}

PureState two_bell_four_party() {
    return tensor_product(phi_plus(), phi_plus());
}

PureState two_bell() {
    // A1 B A2 C -> A1 A2 B C, then fuse A1 A2.
    return merge_parties(permute_parties(two_bell_four_party(), {0, 2, 1, 3}), 0, 2);
}

PureState chiral() {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Constant(8, 1.0 / std::sqrt(8.0));
    amps(7) += Complex(-1.0, 1.0) / (2.0 * std::sqrt(2.0));
    return PureState({2, 2, 2}, std::move(amps));
}

PureState product(int parties) {
    if (parties < 1) {
        throw std::invalid_argument("need at least one party");
    }
    PartyDims dims(static_cast<std::size_t>(parties), 2);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(std::size_t{1} << parties);
    amps(0) = 1.0;
    return PureState(std::move(dims), std::move(amps));
}

double hardy_optimal_angle() {
    return 0.5 * std::asin(3.0 - std::sqrt(5.0));
}

}  // namespace losr::catalog
