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

#ifndef SCOREGAME_ERROR_H_
#define SCOREGAME_ERROR_H_

#include <stdexcept>
#include <string>

namespace scoregame {

enum class ErrorCode {
  kInvalidParams,
  kMissingStrategyEntry,
  kUnsupportedK,
  kNoEquilibrium,
  kBadIndex,
  kMalformed,
  kScopeTooLarge,
  kEmptyPopulation,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures surface as GameError; the code lets callers (the CLI in
// particular) map failures onto exit statuses and guidance text.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scoregame

#endif  // SCOREGAME_ERROR_H_
