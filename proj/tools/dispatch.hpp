// Copyright 2026 The roelcke Authors
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

#ifndef ROELCKE_TOOLS_DISPATCH_HPP
#define ROELCKE_TOOLS_DISPATCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace roelcke::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 1,
  kPrecondition = 2,
  kBudget = 3,
  kInternal = 4,
};

/// Runs one command. `args` excludes the program name. Documents go to
/// `out` (or to the --out file), diagnostics to `err`; "-" as an input path
/// reads `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace roelcke::cli

#endif  // ROELCKE_TOOLS_DISPATCH_HPP
