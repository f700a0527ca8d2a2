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

#ifndef LOSR_EXEC_H
#define LOSR_EXEC_H

namespace losr {

/// Selects between the OpenMP kernel and its serial reference.
///
/// Both paths perform identical per-item arithmetic and reduce in index order,
/// so they produce bitwise-identical results.
enum class Exec {
    Serial,
    Parallel,
};

}  // namespace losr

#endif
