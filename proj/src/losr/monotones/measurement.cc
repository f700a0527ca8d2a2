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

#include "losr/monotones/measurement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "losr/quantum/linalg.h"

namespace losr {

Eigen::Vector3d BlochAngles::vector() const {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

BlochAngles BlochAngles::from_vector(const Eigen::Vector3d &v) {
    double norm = v.norm();
    if (!(norm > 0.0)) {
        throw std::invalid_argument("Bloch vector must be nonzero");
    }
    Eigen::Vector3d u = v / norm;
    double z = std::max(-1.0, std::min(1.0, u.z()));
    return {std::acos(z), std::atan2(u.y(), u.x())};
}

MeasurementFamily::MeasurementFamily(std::vector<std::vector<BlochAngles>> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) {
        throw std::invalid_argument("measurement family needs at least one party");
    }
    for (const auto &party : angles_) {
        if (party.empty()) {
            throw std::invalid_argument("every party needs at least one setting");
        }
        for (const auto &a : party) {
            if (!std::isfinite(a.polar) || !std::isfinite(a.azimuth)) {
                throw std::invalid_argument("measurement angles must be finite");
            }
        }
    }
}

MeasurementFamily MeasurementFamily::from_vectors(const std::vector<std::vector<Eigen::Vector3d>> &vectors) {
    std::vector<std::vector<BlochAngles>> angles;
    for (const auto &party : vectors) {
        auto &row = angles.emplace_back();
        for (const auto &v : party) {
            row.push_back(BlochAngles::from_vector(v));
        }
    }
    return MeasurementFamily(std::move(angles));
}

std::vector<std::vector<Eigen::Vector3d>> MeasurementFamily::vectors() const {
    std::vector<std::vector<Eigen::Vector3d>> out;
    for (const auto &party : angles_) {
        auto &row = out.emplace_back();
        for (const auto &a : party) {
            row.push_back(a.vector());
        }
    }
    return out;
}

LocalMeasurements MeasurementFamily::to_local_measurements() const {
    LocalMeasurements m;
    for (const auto &party : angles_) {
        auto &settings = m.elements.emplace_back();
        for (const auto &a : party) {
            Eigen::Vector3d n = a.vector();
            settings.push_back({bloch_projector(n, 0), bloch_projector(n, 1)});
        }
    }
    return m;
}

MeasurementFamily pauli_family(const std::vector<std::vector<char>> &axes) {
    std::vector<std::vector<Eigen::Vector3d>> vectors;
    for (const auto &party : axes) {
        auto &row = vectors.emplace_back();
        for (char c : party) {
            switch (c) {
                case 'X':
                    row.emplace_back(1.0, 0.0, 0.0);
                    break;
                case 'Y':
                    row.emplace_back(0.0, 1.0, 0.0);
                    break;
                case 'Z':
                    row.emplace_back(0.0, 0.0, 1.0);
                    break;
                default:
                    throw std::invalid_argument("Pauli axis must be X, Y or Z");
            }
        }
    }
    return MeasurementFamily::from_vectors(vectors);
}

}  // namespace losr
