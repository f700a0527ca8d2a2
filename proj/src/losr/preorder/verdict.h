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

#ifndef LOSR_PREORDER_VERDICT_H
#define LOSR_PREORDER_VERDICT_H

#include <optional>
#include <string>
#include <vector>

#include "losr/preorder/factor.h"
#include "losr/quantum/state.h"

namespace losr {

enum class Direction {
    Equivalent,
    PsiToPhiOnly,
    PhiToPsiOnly,
    Incomparable,
    Inconclusive,
};

const char *to_string(Direction direction);

/// lambda_zeta required on one bipartition.
struct Witness {
    Bipartition beta;
    SchmidtSpectrum lambda_zeta;
};

/// Result of testing one conversion direction on every bipartition.
struct DirectionCheck {
    bool ruled_out = false;
    /// Why the direction was ruled out; Decided (bipartite) or
    /// NecessaryPassedOnly (multipartite) when it survived.
    Reason reason = Reason::Decided;
    /// First bipartition on which the direction failed, if any.
    std::optional<Bipartition> failing;
    /// One witness per bipartition when every factorization succeeded.
    std::vector<Witness> witnesses;
    bool marginal = false;
};

struct ConversionVerdict {
    Direction direction = Direction::Inconclusive;
    Reason reason = Reason::Decided;
    /// psi -> phi.
    DirectionCheck forward;
    /// phi -> psi.
    DirectionCheck backward;
    /// Any decision within a factor of 10 of eps_match.
    bool marginal = false;

    /// Witnesses of the direction the verdict allows: forward for Equivalent
    /// and PsiToPhiOnly, backward for PhiToPsiOnly; for Inconclusive, forward
    /// when it survived, else backward. Empty for Incomparable.
    const std::vector<Witness> &witness() const;

    /// True iff psi -> phi is established (Equivalent or PsiToPhiOnly).
    bool allows_forward() const;

    /// Text record:
    ///   <direction> <reason>[ marginal]
    ///   forward <ok|ruled_out> <reason>[ <beta>]
    ///   backward <ok|ruled_out> <reason>[ <beta>]
    ///   <beta>: <lambda_zeta entries>        (one line per witness)
    std::string to_string() const;
};

/// Exact decision for two bipartite pure states. Throws for other party
/// counts.
ConversionVerdict compare_bipartite(const PureState &psi, const PureState &phi);

/// Necessary-condition test for n >= 3 parties; never returns Equivalent.
///
/// A direction is ruled out when some bipartition fails the rank-ratio test
/// or the factorization. For three parties it is also ruled out when the
/// required zeta has rank 1 across two single-party cuts but rank > 1 across
/// the third, since a state that is product across B|AC and C|AB is fully
/// product.
ConversionVerdict multipartite_check(const PureState &psi, const PureState &phi);

/// Whether psi (x) chi -> phi (x) chi for bipartite states, with chi's
/// halves joining the corresponding parties.
bool catalytic_convertible(const PureState &psi, const PureState &phi, const PureState &chi);

/// The bipartite state psi (x) chi with parties (A_psi A_chi | B_psi B_chi).
PureState bipartite_join(const PureState &psi, const PureState &chi);

}  // namespace losr

#endif
