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

#ifndef LOSR_TOOLS_CLI_H
#define LOSR_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace losr {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

/// Runs one command line (without the program name). Records go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace losr

#endif
