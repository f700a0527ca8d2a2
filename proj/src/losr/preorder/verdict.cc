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

#include "losr/preorder/verdict.h"

#include <sstream>
#include <stdexcept>

#include "losr/quantum/schmidt.h"
#include "losr/tolerances.h"

namespace losr {

const char *to_string(Direction direction) {
    switch (direction) {
        case Direction::Equivalent:
            return "Equivalent";
        case Direction::PsiToPhiOnly:
            return "PsiToPhiOnly";
        case Direction::PhiToPsiOnly:
            return "PhiToPsiOnly";
        case Direction::Incomparable:
            return "Incomparable";
        case Direction::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

const std::vector<Witness> &ConversionVerdict::witness() const {
    static const std::vector<Witness> none;
    switch (direction) {
        case Direction::Equivalent:
        case Direction::PsiToPhiOnly:
            return forward.witnesses;
        case Direction::PhiToPsiOnly:
            return backward.witnesses;
        case Direction::Inconclusive:
            return forward.ruled_out ? backward.witnesses : forward.witnesses;
        case Direction::Incomparable:
            return none;
    }
    return none;
}

bool ConversionVerdict::allows_forward() const {
    return direction == Direction::Equivalent || direction == Direction::PsiToPhiOnly;
}

namespace {

void write_check(std::ostream &out, const char *name, const DirectionCheck &c) {
    out << name << ' ' << (c.ruled_out ? "ruled_out" : "ok") << ' ' << losr::to_string(c.reason);
    if (c.failing) {
        out << ' ' << c.failing->label();
    }
    out << '\n';
}

DirectionCheck check_direction(const PureState &from, const PureState &to, const std::vector<Bipartition> &cuts,
                               Reason surviving_reason) {
    const Tolerances &tol = tolerances();
    DirectionCheck check;
    check.reason = surviving_reason;
    std::vector<Witness> witnesses;
    for (const auto &beta : cuts) {
        auto result =
            factor_spectrum(schmidt_spectrum(from, beta), schmidt_spectrum(to, beta), tol.eps_match, tol.tau_rank);
        check.marginal = check.marginal || result.marginal;
        if (!result.found) {
            check.ruled_out = true;
            check.reason = *result.failure;
            check.failing = beta;
            return check;
        }
        witnesses.push_back(Witness{beta, *result.lambda_zeta});
    }
    check.witnesses = std::move(witnesses);
    return check;
}

// For three parties: zeta product across two single-party cuts must be
// product across the third.
void apply_marginal_rule(DirectionCheck &check) {
    if (check.ruled_out || check.witnesses.size() != 3) {
        return;
    }
    double tau = tolerances().tau_rank;
    std::vector<std::size_t> ranks;
    for (const auto &w : check.witnesses) {
        if (w.beta.left().size() != 1) {
            return;
        }
        ranks.push_back(schmidt_rank(w.lambda_zeta, tau));
    }
    for (std::size_t odd = 0; odd < 3; ++odd) {
        bool others_product = true;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j != odd && ranks[j] != 1) {
                others_product = false;
            }
        }
        if (others_product && ranks[odd] > 1) {
            check.ruled_out = true;
            check.reason = Reason::MarginalContradiction;
            check.failing = check.witnesses[odd].beta;
            check.witnesses.clear();
            return;
        }
    }
}

}  // namespace

std::string ConversionVerdict::to_string() const {
    std::ostringstream out;
    out << losr::to_string(direction) << ' ' << losr::to_string(reason);
    if (marginal) {
        out << " marginal";
    }
    out << '\n';
    write_check(out, "forward", forward);
    write_check(out, "backward", backward);
    for (const auto &w : witness()) {
        out << w.beta.label() << ": " << w.lambda_zeta.to_string() << '\n';
    }
    return out.str();
}

ConversionVerdict compare_bipartite(const PureState &psi, const PureState &phi) {
    if (psi.num_parties() != 2 || phi.num_parties() != 2) {
        throw std::invalid_argument("compare_bipartite needs two-party states; use multipartite_check");
    }
    std::vector<Bipartition> cut{Bipartition({0}, 2)};
    ConversionVerdict v;
    v.forward = check_direction(psi, phi, cut, Reason::Decided);
    v.backward = check_direction(phi, psi, cut, Reason::Decided);
    v.marginal = v.forward.marginal || v.backward.marginal;
    v.reason = Reason::Decided;
    bool f = !v.forward.ruled_out;
    bool b = !v.backward.ruled_out;
    bool equal = spectra_equal(schmidt_spectrum(psi, cut[0]), schmidt_spectrum(phi, cut[0]), tolerances().eps_match);
    if (equal) {
        v.direction = Direction::Equivalent;
    } else if (f && b) {
        // Only reachable at the tolerance boundary.
        v.direction = Direction::Equivalent;
        v.marginal = true;
    } else if (f) {
        v.direction = Direction::PsiToPhiOnly;
    } else if (b) {
        v.direction = Direction::PhiToPsiOnly;
    } else {
        v.direction = Direction::Incomparable;
    }
    return v;
}

ConversionVerdict multipartite_check(const PureState &psi, const PureState &phi) {
    if (psi.num_parties() != phi.num_parties()) {
        throw std::invalid_argument("states have different numbers of parties");
    }
    if (psi.num_parties() < 3) {
        throw std::invalid_argument("multipartite_check needs at least three parties; use compare_bipartite");
    }
    auto cuts = Bipartition::all(psi.num_parties());
    ConversionVerdict v;
    v.forward = check_direction(psi, phi, cuts, Reason::NecessaryPassedOnly);
    v.backward = check_direction(phi, psi, cuts, Reason::NecessaryPassedOnly);
    if (psi.num_parties() == 3) {
        apply_marginal_rule(v.forward);
        apply_marginal_rule(v.backward);
    }
    v.marginal = v.forward.marginal || v.backward.marginal;
    if (v.forward.ruled_out && v.backward.ruled_out) {
        v.direction = Direction::Incomparable;
        v.reason = Reason::Decided;
    } else {
        v.direction = Direction::Inconclusive;
        v.reason = Reason::NecessaryPassedOnly;
    }
    return v;
}

PureState bipartite_join(const PureState &psi, const PureState &chi) {
    if (psi.num_parties() != 2 || chi.num_parties() != 2) {
        throw std::invalid_argument("bipartite_join needs two-party states");
    }
    // A_psi B_psi A_chi B_chi -> A_psi A_chi B_psi B_chi.
    PureState joint = permute_parties(tensor_product(psi, chi), {0, 2, 1, 3});
    return merge_parties(merge_parties(joint, 0, 2), 1, 2);
}

bool catalytic_convertible(const PureState &psi, const PureState &phi, const PureState &chi) {
    if (psi.num_parties() != 2 || phi.num_parties() != 2 || chi.num_parties() != 2) {
        throw std::invalid_argument("catalysis is defined here for bipartite states only");
    }
    const Tolerances &tol = tolerances();
    Bipartition cut({0}, 2);
    auto with_psi = schmidt_spectrum(bipartite_join(psi, chi), cut);
    auto with_phi = schmidt_spectrum(bipartite_join(phi, chi), cut);
    return factor_spectrum(with_psi, with_phi, tol.eps_match, tol.tau_rank).found;
}

}  // namespace losr
