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

#ifndef LOSR_QUANTUM_STATE_H
#define LOSR_QUANTUM_STATE_H

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace losr {

using Complex = std::complex<double>;

/// Local Hilbert-space dimensions, one per party. Party 0 is the most
/// significant index of the computational basis.
using PartyDims = std::vector<int>;

/// Product of the party dimensions. Throws if any dimension is non-positive.
std::size_t total_dimension(const PartyDims &dims);

/// Largest total dimension accepted by the dense routines.
constexpr std::size_t kMaxTotalDimension = 4096;

/// A normalized pure state over labeled parties.
class PureState {
   public:
    /// Validates dims and length. Amplitudes whose norm is off by less than
    /// `kAutoNormalizeLimit` are rescaled with a warning; larger deviations
    /// throw std::invalid_argument.
    PureState(PartyDims dims, Eigen::VectorXcd amplitudes);

    const PartyDims &dims() const {
        return dims_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amplitudes_;
    }
    std::size_t num_parties() const {
        return dims_.size();
    }
    std::size_t dimension() const {
        return static_cast<std::size_t>(amplitudes_.size());
    }

   private:
    PartyDims dims_;
    Eigen::VectorXcd amplitudes_;
};

/// A density operator over labeled parties.
class DensityMatrix {
   public:
    /// Validates Hermiticity, unit trace and positivity within eps_norm.
    DensityMatrix(PartyDims dims, Eigen::MatrixXcd matrix);

    static DensityMatrix from_pure(const PureState &psi);

    const PartyDims &dims() const {
        return dims_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    std::size_t num_parties() const {
        return dims_.size();
    }
    std::size_t dimension() const {
        return static_cast<std::size_t>(matrix_.rows());
    }

   private:
    PartyDims dims_;
    Eigen::MatrixXcd matrix_;
};

/// A split of the parties into two nonempty groups. Only the left side is
/// stored; the right side is every other party.
class Bipartition {
   public:
    /// `left` must be a nonempty proper subset of {0, ..., num_parties-1}.
    Bipartition(std::vector<int> left, std::size_t num_parties);

    /// Parses labels such as "A|BC" or "AC|B". Parties are letters starting at
    /// A; every party must appear exactly once.
    static Bipartition parse(const std::string &label);

    /// All bipartitions of n parties up to swapping sides. Singletons come
    /// first, in party order; a split into equal halves is listed once, with
    /// party 0 on the left.
    static std::vector<Bipartition> all(std::size_t num_parties);

    const std::vector<int> &left() const {
        return left_;
    }
    std::vector<int> right() const;
    std::size_t num_parties() const {
        return num_parties_;
    }
    Bipartition complement() const;
    std::string label() const;

    bool operator==(const Bipartition &other) const = default;

   private:
    std::vector<int> left_;
    std::size_t num_parties_;
};

/// Letter name of a party ("A" for 0, ...).
std::string party_label(int party);

/// Kronecker product; parties of `b` are appended after those of `a`.
PureState tensor_product(const PureState &a, const PureState &b);
DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b);

/// Reorders parties: party `order[k]` of the input becomes party k.
PureState permute_parties(const PureState &psi, const std::vector<int> &order);
DensityMatrix permute_parties(const DensityMatrix &rho, const std::vector<int> &order);

/// Fuses `count` adjacent parties starting at `first` into one party. The
/// amplitude layout is unchanged.
PureState merge_parties(const PureState &psi, std::size_t first, std::size_t count);
DensityMatrix merge_parties(const DensityMatrix &rho, std::size_t first, std::size_t count);

/// Reduced state on `keep` (in the given order). Throws if `keep` is empty.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep);

/// Entrywise complex conjugate in the computational basis.
PureState conjugate(const PureState &psi);

/// Product of a state with a global phase factor exp(i*phase).
PureState with_global_phase(const PureState &psi, double phase);

/// max |a_ij - b_ij|; throws on shape mismatch.
double max_entry_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

}  // namespace losr

#endif
