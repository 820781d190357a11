// SPDX-License-Identifier: Apache-2.0
//
// buspl - in-vehicle 60 GHz path loss modelling and link budget toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BUSPL_TOOLS_CLI_HPP
#define BUSPL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace buspl::cli {

// Process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_input_error = 2,
    exit_insufficient_data = 3,
    exit_ineligible = 4,
};

// Runs one command line. `args` excludes the program name. Primary output goes to --output
// when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace buspl::cli

#endif
