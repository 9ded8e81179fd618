// Copyright 2026 The urmatch Authors.
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urmatch::cli {

/// Process exit statuses of the urmatch tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitOracleLimit = 3,
  kExitInternal = 4,
};

/// Environment variable that raises the oracle's vertex limit.
inline constexpr const char* kOracleLimitEnv = "URMATCH_ORACLE_LIMIT";

/// Runs one command line (without the program name). Answers go to `out`,
/// diagnostics to `err`.
///
///   check <file>... [--property some|every|both] [--json] [--witness]
///                   [--all-failures] [--verify] [--no-timing]
///   is-ur <file> --matching "u-v,u-v,..."
///   decompose <file> [--json]
///   oracle <file> --property some|every|both [--force]
///   selftest --nmax <k> --random <count> --seed <s>
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urmatch::cli
