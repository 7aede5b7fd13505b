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

#ifndef SCOREGAME_SIMULATOR_H_
#define SCOREGAME_SIMULATOR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "scoregame/model.h"
#include "scoregame/profile.h"

namespace scoregame {

struct SimConfig {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  ModelParams params;
  EquilibriumProfile profile;
  int workers = 1;  // 0: hardware concurrency; results do not depend on it
};

struct CohortCounts {
  std::uint64_t students = 0;
  std::uint64_t admitted = 0;
  std::vector<std::uint64_t> sequences;  // realized sequence counts by ScoreSeq::Index()

  friend bool operator==(const CohortCounts&, const CohortCounts&) = default;
};

// Same layout as FairnessReport, measured on the sample.
struct EmpiricalReport {
  std::array<CohortCounts, 4> cohorts;  // by Cohort::Index()
  std::array<std::optional<double>, 2> fnr;
  std::array<std::optional<double>, 2> fpr;
  std::optional<double> fnr_gap;
  std::optional<double> fpr_gap;
  std::optional<double> ppv;
  std::optional<double> npv;
  double college_payoff = 0;

  friend bool operator==(const EmpiricalReport&, const EmpiricalReport&) = default;
};

// Students are simulated in fixed-size blocks; block b draws from a generator
// seeded with (seed, b), so the report is identical for any worker count.
// Throws GameError(kEmptyPopulation) when n == 0.
EmpiricalReport Simulate(const SimConfig& config);

constexpr std::uint64_t kSimBlock = 1 << 16;

}  // namespace scoregame

#endif  // SCOREGAME_SIMULATOR_H_
