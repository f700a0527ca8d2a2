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

#ifndef LOSR_QUANTUM_CHANNEL_H
#define LOSR_QUANTUM_CHANNEL_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "losr/quantum/state.h"

namespace losr {

/// A CPTP map on one party given by Kraus operators. Each operator is
/// (output dim) x (input dim); all operators share the same shape.
struct LocalChannel {
    std::vector<Eigen::MatrixXcd> kraus;

    static LocalChannel identity(int dim);
    /// rho -> Tr(rho) I/d.
    static LocalChannel depolarizing(int dim);
    static LocalChannel unitary(const Eigen::MatrixXcd &u);

    int input_dim() const;
    int output_dim() const;
    /// max |sum_k K_k^dagger K_k - I|.
    double completeness_defect() const;
};

/// One local channel per party, acting in parallel.
struct ProductChannel {
    std::vector<LocalChannel> parties;
};

/// A convex mixture of product channels. A single component is an LO map;
/// several components need shared randomness.
class LocalChannelFamily {
   public:
    /// Validates Kraus completeness (eps_norm), matching shapes across
    /// components, and weights that are nonnegative and sum to 1.
    LocalChannelFamily(std::vector<double> weights, std::vector<ProductChannel> components);

    static LocalChannelFamily single(ProductChannel channel);

    const std::vector<double> &weights() const {
        return weights_;
    }
    const std::vector<ProductChannel> &components() const {
        return components_;
    }
    std::size_t num_parties() const {
        return components_.front().parties.size();
    }
    PartyDims input_dims() const;
    PartyDims output_dims() const;
    bool uses_shared_randomness() const {
        return components_.size() > 1;
    }

   private:
    std::vector<double> weights_;
    std::vector<ProductChannel> components_;
};

/// Applies the mixture to `rho`. Throws on dimension mismatch.
DensityMatrix apply_channel(const DensityMatrix &rho, const LocalChannelFamily &channel);

}  // namespace losr

#endif
