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

#ifndef LOSR_QUANTUM_SCHMIDT_H
#define LOSR_QUANTUM_SCHMIDT_H

#include <cstddef>
#include <string>
#include <vector>

#include "losr/quantum/state.h"

namespace losr {

/// Squared Schmidt coefficients, always sorted in descending order.
class SchmidtSpectrum {
   public:
    /// Sorts descending. Throws if an entry is below -eps_norm or the entries
    /// do not sum to 1 within eps_norm. Tiny negative entries are clamped to 0.
    explicit SchmidtSpectrum(std::vector<double> values);

    const std::vector<double> &values() const {
        return values_;
    }
    std::size_t size() const {
        return values_.size();
    }
    double operator[](std::size_t i) const {
        return values_[i];
    }

    /// Entries strictly greater than `tau_rank`, still descending. The result
    /// is not renormalized.
    std::vector<double> nonzero(double tau_rank) const;

    /// Space-separated entries with 12 significant digits.
    std::string to_string() const;

   private:
    std::vector<double> values_;
};

/// Eigenvalues of the reduced state on `beta.left()`, computed from whichever
/// side has the smaller dimension. Zero entries are retained.
SchmidtSpectrum schmidt_spectrum(const PureState &psi, const Bipartition &beta);

/// Number of entries strictly greater than `tau_rank` (which must be > 0).
std::size_t schmidt_rank(const SchmidtSpectrum &spectrum, double tau_rank);

/// Descending sort of all pairwise products.
SchmidtSpectrum tensor(const SchmidtSpectrum &a, const SchmidtSpectrum &b);

/// Two-party state sum_i sqrt(lambda_i) |ii> of local dimension `size()`.
PureState schmidt_form_state(const SchmidtSpectrum &spectrum);

}  // namespace losr

#endif
