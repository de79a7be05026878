// Copyright 2026 The Authors.
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

// The dmkit command-line front end.
//
//   dmkit [--seed N] [--field-bits 8|16|32|64] [--output PATH] <command> ...
//
//   sparsify NET [--mode mader|all-partitions|multicut] [--verify]
//                [--report PATH] [--rounds N]
//   repset INPUT --mode matroid|dm-card|dm-rank [--family PATH]
//                [--terminals a,b,...] [--q N]
//   oracle matchable|nu|deficiency|multiway-cut NET [--set a,b,...]
//   oracle check-mimic NET NET
//   gen lb-repairs|lb-extends|random|k4-pendants [--k N] [--q N] [--n N]
//                [--blocks N] [--p X]
//
// The seed defaults to $DMKIT_SEED, then 1. Results go to --output or stdout.

#ifndef DMKIT_TOOLS_CLI_HPP_
#define DMKIT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dmkit::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kMalformedInput = 2,
  kInternalGuard = 3,
  kMonomialBound = 4,
  kOracleSize = 5,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmkit::cli

#endif  // DMKIT_TOOLS_CLI_HPP_
