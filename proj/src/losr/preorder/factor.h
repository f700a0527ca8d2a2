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

#ifndef LOSR_PREORDER_FACTOR_H
#define LOSR_PREORDER_FACTOR_H

#include <cstddef>
#include <optional>

#include "losr/quantum/schmidt.h"

namespace losr {

/// Why a conversion was or was not ruled out.
enum class Reason {
    RankRatioNonInteger,
    FactorizationFailed,
    MarginalContradiction,
    NecessaryPassedOnly,
    Decided,
};

const char *to_string(Reason reason);

/// Outcome of searching for lambda_zeta with
/// sort(lambda_psi) == sort(lambda_phi (x) lambda_zeta).
struct FactorizationResult {
    bool found = false;
    std::optional<SchmidtSpectrum> lambda_zeta;
    /// Found: max |lambda_phi_i * zeta_j - matched psi entry|. Not found: the
    /// absolute mismatch of the match that failed (0 for a rank failure).
    double residual = 0.0;
    /// Set when the decision sits within a factor of 10 of eps_match.
    bool marginal = false;
    /// RankRatioNonInteger or FactorizationFailed when not found.
    std::optional<Reason> failure;
};

/// Equal lengths after dropping entries <= tau_rank, and entrywise equal
/// within relative tolerance eps_match on the descending sorts.
bool spectra_equal(const SchmidtSpectrum &a, const SchmidtSpectrum &b, double eps_match);

/// sr_psi / sr_phi when it is a positive integer.
std::optional<std::size_t> rank_ratio_admissible(std::size_t sr_psi, std::size_t sr_phi);

/// Greedy multiset peeling. Entries <= tau_rank are dropped first. At each
/// step the largest unconsumed psi entry fixes the next zeta entry as
/// psi_top / phi_max; the products phi_i * zeta are then removed from the
/// remaining psi entries, each time picking the closest entry (lowest index on
/// ties) and requiring relative agreement within eps_match.
///
/// In exact arithmetic the largest remaining entry must be phi_max times the
/// largest unassigned zeta entry, so the peeling finds a solution whenever one
/// exists, and the solution is unique.
FactorizationResult factor_spectrum(const SchmidtSpectrum &lambda_psi, const SchmidtSpectrum &lambda_phi,
                                    double eps_match);
FactorizationResult factor_spectrum(const SchmidtSpectrum &lambda_psi, const SchmidtSpectrum &lambda_phi,
                                    double eps_match, double tau_rank);

/// |x - y| / max(|x|, |y|), or 0 when both vanish.
double relative_mismatch(double x, double y);

}  // namespace losr

#endif
