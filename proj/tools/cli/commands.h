// Copyright 2026 The Arndt Compositions Authors
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

#ifndef ARNDT_TOOLS_CLI_COMMANDS_H_
#define ARNDT_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace arndt::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // verification failure or cap hit
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;  // b-file differs from reference

// Runs the command line `args` (without the program name). Data goes to
// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace arndt::cli

#endif  // ARNDT_TOOLS_CLI_COMMANDS_H_
