// Copyright 2026 The Scoregame Authors
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

#ifndef SCOREGAME_CLI_COMMANDS_H_
#define SCOREGAME_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace scoregame {

// Exit codes: 0 success, 2 usage or invalid parameters, 3 no equilibrium or
// scope too large for the request, 4 I/O failure.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scoregame

#endif  // SCOREGAME_CLI_COMMANDS_H_
