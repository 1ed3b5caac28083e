// Copyright 2026 The etdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ETDOM_TOOLS_CLI_HPP
#define ETDOM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace etdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardRail = 3;

/// Runs the command line `args` (without the program name). Reads "-" from
/// `in` and writes results to `out`, diagnostics to `err`. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace etdom::cli

#endif  // ETDOM_TOOLS_CLI_HPP
