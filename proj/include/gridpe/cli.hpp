// Copyright 2026 The gridpe Authors
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

#ifndef GRIDPE_CLI_HPP_
#define GRIDPE_CLI_HPP_

#include <string>
#include <vector>

namespace gridpe {

// Entry point behind main(). `args` excludes the program name. Returns the
// process exit status: 0 on success, nonzero with a message on stderr for
// invalid arguments, bad configs, or runtime failures.
int run_cli(std::vector<std::string> args);

}  // namespace gridpe

#endif  // GRIDPE_CLI_HPP_
