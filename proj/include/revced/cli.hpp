// Copyright 2026 The revced Authors
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

#ifndef REVCED_CLI_HPP
#define REVCED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace revced {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_CHECK_FAILED = 1,
    EXIT_USAGE = 2,
};

/// Runs the command line `args` (without the program name).
///
/// Subcommands: truth-table, invert, verify, metrics, ced build, campaign,
/// scheme-compare. Returns 0 on success, 1 when a check fails (verification
/// failure or silent escapes) and 2 on usage, parse or input errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace revced

#endif
