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

#ifndef LOSR_SELFTEST_FLAG_H
#define LOSR_SELFTEST_FLAG_H

#include <vector>

#include <Eigen/Dense>

#include "losr/quantum/channel.h"
#include "losr/quantum/state.h"

namespace losr {

/// A bipartite pure state dressed with locally controlled unitaries and
/// classical flags: flags (i, j) are drawn from p, Alice applies U_A^(i),
/// Bob applies U_B^(j), and each keeps their flag.
struct FlagConstruction {
    PureState base_state;
    /// p(i, j); rows index Alice's flag, columns Bob's.
    Eigen::MatrixXd dist;
    std::vector<Eigen::MatrixXcd> unitaries_a;
    std::vector<Eigen::MatrixXcd> unitaries_b;

    /// Throws std::invalid_argument unless the base state is bipartite, p is
    /// a probability table matching the unitary counts, and every unitary
    /// has the right size and is unitary within 1e-12.
    void validate() const;
    int flag_dim_a() const {
        return static_cast<int>(unitaries_a.size());
    }
    int flag_dim_b() const {
        return static_cast<int>(unitaries_b.size());
    }
    /// p(i, j) = p(i) p(j) within `eps`.
    bool factorizes(double eps = 1e-12) const;
};

/// sum_ij p(ij) (U_A^(i) x U_B^(j)) |psi><psi| (...)^dagger x |i><i| x |j><j|,
/// with parties A = (A, flag_A) and B = (B, flag_B).
DensityMatrix flag_mixed_state(const FlagConstruction &fc);

/// Prepare the flags and apply the controlled unitaries. A single product
/// channel when p factorizes, otherwise a mixture over the flag pairs.
LocalChannelFamily flag_forward_channel(const FlagConstruction &fc);

/// Controlled inverses followed by discarding the flags, using the given
/// unitaries in place of the construction's.
LocalChannelFamily flag_backward_channel(const std::vector<Eigen::MatrixXcd> &unitaries_a,
                                         const std::vector<Eigen::MatrixXcd> &unitaries_b);

struct FlagRoundtripReport {
    bool passed = false;
    /// Max-entry distances of forward(psi) to rho and backward(rho) to psi.
    double forward_error = 0.0;
    double backward_error = 0.0;
    bool shared_randomness_free = false;
};

constexpr double kFlagRoundtripTolerance = 1e-9;

FlagRoundtripReport flag_roundtrip_check(const FlagConstruction &fc);
/// Same check with the undo step built from other unitaries.
FlagRoundtripReport flag_roundtrip_check(const FlagConstruction &fc,
                                         const std::vector<Eigen::MatrixXcd> &backward_a,
                                         const std::vector<Eigen::MatrixXcd> &backward_b);

}  // namespace losr

#endif
