// Copyright 2026 The invsp Authors
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

// The invsp command line, as a library so tests can drive it in process.

#ifndef INVSP_CLI_HPP_
#define INVSP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace invsp::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kBudgetExhausted = 3,
};

// args excludes the program name. "-" as a file argument reads `in`.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace invsp::cli

#endif  // INVSP_CLI_HPP_
