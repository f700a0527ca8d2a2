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

#include "losr/monotones/losr_channel.h"

#include <random>
#include <stdexcept>

#include "losr/quantum/random.h"

namespace losr {

LocalChannelFamily sample_losr_channel(const PartyDims &dims, std::uint64_t seed) {
    if (dims.empty()) {
        throw std::invalid_argument("channel needs at least one party");
    }
    Rng rng = make_rng(seed, 0x105c);
    int components = std::uniform_int_distribution<int>(1, 4)(rng);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> weights;
    double total = 0.0;
    for (int c = 0; c < components; ++c) {
        weights.push_back(expo(rng));
        total += weights.back();
    }
    for (double &w : weights) {
        w /= total;
    }
    std::vector<ProductChannel> parts;
    for (int c = 0; c < components; ++c) {
        ProductChannel pc;
        for (int d : dims) {
            if (d < 1) {
                throw std::invalid_argument("party dimensions must be positive");
            }
            if (d == 1) {
                pc.parties.push_back(LocalChannel::identity(1));
                continue;
            }
            Eigen::MatrixXcd v = random_isometry(2 * d, d, rng);
            pc.parties.push_back(LocalChannel{{v.topRows(d), v.bottomRows(d)}});
        }
        parts.push_back(std::move(pc));
    }
    return LocalChannelFamily(std::move(weights), std::move(parts));
}

}  // namespace losr
