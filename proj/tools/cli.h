// Copyright 2026 The Bargmann Authors
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

#ifndef BARGMANN_TOOLS_CLI_H
#define BARGMANN_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace bargmann::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    /// Nothing found: set incoherent, membership holds, check passed.
    kNegative = 0,
    /// Positive finding: coherence detected, a constraint violated, a check failed.
    kPositive = 1,
    /// Bad input or any other operational failure.
    kError = 2,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to `out`
/// unless --out redirects them to a file; diagnostics go to `err` only.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bargmann::cli

#endif
