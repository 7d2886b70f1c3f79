// Copyright 2026 The dsynth Authors
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

#ifndef DSYNTH_TOOLS_CLI_H
#define DSYNTH_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace dsynth::cli {

/// Process exit codes of the dsynth tool.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBadInput = 2,
    kWriteFailed = 3,
};

/// Runs the dsynth command line. args[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dsynth::cli

#endif  // DSYNTH_TOOLS_CLI_H
