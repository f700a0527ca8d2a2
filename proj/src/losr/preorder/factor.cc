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

#include "losr/preorder/factor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "losr/tolerances.h"

namespace losr {

const char *to_string(Reason reason) {
    switch (reason) {
        case Reason::RankRatioNonInteger:
            return "RankRatioNonInteger";
        case Reason::FactorizationFailed:
            return "FactorizationFailed";
        case Reason::MarginalContradiction:
            return "MarginalContradiction";
        case Reason::NecessaryPassedOnly:
            return "NecessaryPassedOnly";
        case Reason::Decided:
            return "Decided";
    }
    return "?";
}

double relative_mismatch(double x, double y) {
    double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

bool spectra_equal(const SchmidtSpectrum &a, const SchmidtSpectrum &b, double eps_match) {
    double tau = tolerances().tau_rank;
    auto x = a.nonzero(tau);
    auto y = b.nonzero(tau);
    if (x.size() != y.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (relative_mismatch(x[i], y[i]) > eps_match) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> rank_ratio_admissible(std::size_t sr_psi, std::size_t sr_phi) {
    if (sr_psi == 0 || sr_phi == 0 || sr_psi % sr_phi != 0) {
        return std::nullopt;
    }
    return sr_psi / sr_phi;
}

FactorizationResult factor_spectrum(const SchmidtSpectrum &lambda_psi, const SchmidtSpectrum &lambda_phi,
                                    double eps_match) {
    return factor_spectrum(lambda_psi, lambda_phi, eps_match, tolerances().tau_rank);
}

FactorizationResult factor_spectrum(const SchmidtSpectrum &lambda_psi, const SchmidtSpectrum &lambda_phi,
                                    double eps_match, double tau_rank) {
    FactorizationResult result;
    auto psi = lambda_psi.nonzero(tau_rank);
    auto phi = lambda_phi.nonzero(tau_rank);
    auto k = rank_ratio_admissible(psi.size(), phi.size());
    if (!k) {
        result.failure = Reason::RankRatioNonInteger;
        return result;
    }
    std::size_t m = phi.size();
    std::size_t n = psi.size();
    std::vector<bool> used(n, false);
    // matched[j * m + i] is the psi index assigned to phi_i * zeta_j.
    std::vector<std::size_t> matched(n);
    std::vector<double> zeta;
    zeta.reserve(*k);
    std::size_t next_top = 0;
    double worst_rel = 0.0;

    for (std::size_t j = 0; j < *k; ++j) {
        while (used[next_top]) {
            ++next_top;
        }
        double z = psi[next_top] / phi[0];
        used[next_top] = true;
        matched[j * m] = next_top;
        for (std::size_t i = 1; i < m; ++i) {
            double target = phi[i] * z;
            std::size_t best = n;
            double best_gap = std::numeric_limits<double>::infinity();
            for (std::size_t t = 0; t < n; ++t) {
                if (used[t]) {
                    continue;
                }
                double gap = std::abs(psi[t] - target);
                if (gap < best_gap) {
                    best_gap = gap;
                    best = t;
                }
            }
            double rel = relative_mismatch(psi[best], target);
            if (rel > eps_match) {
                result.failure = Reason::FactorizationFailed;
                result.residual = best_gap;
                result.marginal = rel < 10.0 * eps_match;
                return result;
            }
            worst_rel = std::max(worst_rel, rel);
            used[best] = true;
            matched[j * m + i] = best;
        }
        // Least-squares zeta_j over its whole block.
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            num += phi[i] * psi[matched[j * m + i]];
            den += phi[i] * phi[i];
        }
        zeta.push_back(num / den);
    }

    double residual = 0.0;
    for (std::size_t j = 0; j < *k; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            double target = phi[i] * zeta[j];
            double actual = psi[matched[j * m + i]];
            residual = std::max(residual, std::abs(target - actual));
            worst_rel = std::max(worst_rel, relative_mismatch(target, actual));
        }
    }
    if (worst_rel > eps_match) {
        result.failure = Reason::FactorizationFailed;
        result.residual = residual;
        result.marginal = worst_rel < 10.0 * eps_match;
        return result;
    }
    // Truncation leaves sum(zeta) short of 1 by at most the dropped mass.
    double total = std::accumulate(zeta.begin(), zeta.end(), 0.0);
    for (double &z : zeta) {
        z /= total;
    }
    result.found = true;
    result.lambda_zeta = SchmidtSpectrum(std::move(zeta));
    result.residual = residual;
    result.marginal = worst_rel > eps_match / 10.0;
    return result;
}

}  // namespace losr
