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

#ifndef LOSR_QUANTUM_INDEX_H
#define LOSR_QUANTUM_INDEX_H

#include <cstddef>
#include <vector>

namespace losr::index {

/// Row-major strides: the last party varies fastest.
inline std::vector<std::size_t> strides(const std::vector<int> &dims) {
    std::vector<std::size_t> out(dims.size());
    std::size_t s = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = s;
        s *= static_cast<std::size_t>(dims[k]);
    }
    return out;
}

/// For every multi-index over `dims` (row-major), the sum of digit * stride.
inline std::vector<std::size_t> offsets(const std::vector<int> &dims, const std::vector<std::size_t> &part_strides) {
    std::vector<std::size_t> out{0};
    for (std::size_t k = 0; k < dims.size(); ++k) {
        std::vector<std::size_t> next;
        next.reserve(out.size() * static_cast<std::size_t>(dims[k]));
        for (std::size_t base : out) {
            for (int d = 0; d < dims[k]; ++d) {
                next.push_back(base + static_cast<std::size_t>(d) * part_strides[k]);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Splits a row-major flat index into digits.
inline std::vector<int> digits(std::size_t flat, const std::vector<int> &dims) {
    std::vector<int> out(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = static_cast<int>(flat % static_cast<std::size_t>(dims[k]));
        flat /= static_cast<std::size_t>(dims[k]);
    }
    return out;
}

inline std::size_t flatten(const std::vector<int> &digits, const std::vector<int> &dims) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        flat = flat * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(digits[k]);
    }
    return flat;
}

inline std::size_t product(const std::vector<int> &dims) {
    std::size_t p = 1;
    for (int d : dims) {
        p *= static_cast<std::size_t>(d);
    }
    return p;
}

}  // namespace losr::index

#endif
