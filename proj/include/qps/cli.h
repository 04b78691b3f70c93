// Copyright 2026 The QPS Authors
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


#ifndef QPS_CLI_H
#define QPS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qps {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitIo = 3,
    kExitVerify = 4,
};

/// The right-hand side printed in the n=2 demonstration, and its solution.
std::vector<double> demo_rhs();
std::vector<double> demo_reference();

/// Runs the command line `args` (without the program name). Everything goes to
/// `out` / `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qps

#endif
