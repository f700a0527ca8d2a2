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

#ifndef LOSR_WARNINGS_H
#define LOSR_WARNINGS_H

#include <functional>
#include <string_view>

namespace losr {

using WarningHandler = std::function<void(std::string_view)>;

/// Replaces the handler used for recoverable input problems (for example a
/// slightly unnormalized state). The default writes to stderr. Returns the
/// previous handler.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

}  // namespace losr

#endif
