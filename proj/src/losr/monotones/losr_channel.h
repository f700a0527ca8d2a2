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

#ifndef LOSR_MONOTONES_LOSR_CHANNEL_H
#define LOSR_MONOTONES_LOSR_CHANNEL_H

#include <cstdint>

#include "losr/quantum/channel.h"

namespace losr {

/// Random free operation: a mixture of 1 to 4 product channels with
/// Dirichlet(1) weights, each local map given by a Haar-random pair of Kraus
/// operators (the two halves of a 2d x d isometry). One-dimensional parties
/// get the identity. Output dimensions equal input dimensions.
LocalChannelFamily sample_losr_channel(const PartyDims &dims, std::uint64_t seed);

}  // namespace losr

#endif
