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

#ifndef SCOREGAME_CLI_REPORT_JSON_H_
#define SCOREGAME_CLI_REPORT_JSON_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "scoregame/analytic.h"
#include "scoregame/metrics.h"
#include "scoregame/search.h"
#include "scoregame/simulator.h"

namespace scoregame {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json Num(const Rational& x);
Json Num(const std::optional<Rational>& x);
Json Num(const std::optional<double>& x);

Json ToJson(const ModelParams& params);
Json ToJson(const FairnessReport& report);
Json ToJson(const EquilibriumProfile& profile);
Json ToJson(const OutcomeClass& outcome);
Json ToJson(const Region& region);
Json ToJson(const EmpiricalReport& report);

// CSV cell: %.12g, empty when undefined.
std::string Cell(const std::optional<Rational>& x);
std::string Cell(const Rational& x);

}  // namespace scoregame

#endif  // SCOREGAME_CLI_REPORT_JSON_H_
