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

#ifndef LOSR_TOLERANCES_H
#define LOSR_TOLERANCES_H

namespace losr {

/// Numerical thresholds shared by every module.
///
/// The process-wide instance returned by `tolerances()` is read by operations
/// that do not take an explicit tolerance argument. Set it once at startup
/// (the CLI does so from its global flags) before any parallel work begins.
struct Tolerances {
    /// Normalization, Hermiticity and completeness checks.
    double eps_norm = 1e-9;
    /// Spectrum entries at or below this value count as zero.
    double tau_rank = 1e-10;
    /// Relative tolerance when matching spectrum entries.
    double eps_match = 1e-8;
};

Tolerances &tolerances();

/// Deviation in norm below which input states are silently rescaled (with a
/// warning); anything larger is rejected.
constexpr double kAutoNormalizeLimit = 1e-3;

}  // namespace losr

#endif
