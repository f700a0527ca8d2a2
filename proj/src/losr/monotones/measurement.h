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

#ifndef LOSR_MONOTONES_MEASUREMENT_H
#define LOSR_MONOTONES_MEASUREMENT_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "losr/quantum/born.h"

namespace losr {

/// A Bloch direction in spherical angles (radians).
struct BlochAngles {
    double polar = 0.0;
    double azimuth = 0.0;

    Eigen::Vector3d vector() const;
    /// Normalizes `v` first; throws for the zero vector.
    static BlochAngles from_vector(const Eigen::Vector3d &v);
};

/// One projective qubit measurement per (party, setting). Outcome 0 is the
/// +1 eigenvector of n . sigma.
///
/// Only qubit measurements are represented. Higher local dimensions would
/// add a unitary parametrization here and a matching `to_local_measurements`.
class MeasurementFamily {
   public:
    MeasurementFamily() = default;
    /// angles[party][setting]; every party needs at least one setting.
    explicit MeasurementFamily(std::vector<std::vector<BlochAngles>> angles);
    static MeasurementFamily from_vectors(const std::vector<std::vector<Eigen::Vector3d>> &vectors);

    std::size_t num_parties() const {
        return angles_.size();
    }
    std::size_t num_settings(std::size_t party) const {
        return angles_.at(party).size();
    }
    const BlochAngles &angles(std::size_t party, std::size_t setting) const {
        return angles_.at(party).at(setting);
    }
    const std::vector<std::vector<BlochAngles>> &all_angles() const {
        return angles_;
    }
    Eigen::Vector3d vector(std::size_t party, std::size_t setting) const {
        return angles(party, setting).vector();
    }
    std::vector<std::vector<Eigen::Vector3d>> vectors() const;

    LocalMeasurements to_local_measurements() const;

   private:
    std::vector<std::vector<BlochAngles>> angles_;
};

/// n . sigma for each unit vector, per party and setting.
MeasurementFamily pauli_family(const std::vector<std::vector<char>> &axes);

}  // namespace losr

#endif
