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

#ifndef SCOREGAME_METRICS_H_
#define SCOREGAME_METRICS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scoregame/model.h"
#include "scoregame/profile.h"
#include "scoregame/rational.h"
#include "scoregame/search.h"

namespace scoregame {

// Per-category error rates are indexed by Category. Gaps are Category 1 minus
// Category 2, so a negative fnr_gap favours the retakers. A rate is nullopt
// when its category has no students of the relevant type; ppv and npv are
// nullopt when nobody is admitted or rejected.
struct FairnessReport {
  std::array<std::optional<Rational>, 2> fnr;
  std::array<std::optional<Rational>, 2> fpr;
  std::optional<Rational> fnr_gap;
  std::optional<Rational> fpr_gap;
  std::optional<Rational> ppv;
  std::optional<Rational> npv;
  Rational college_payoff;
};

// Probability that a student of the given cohort is admitted under profile.
Rational AdmissionProbability(const ModelParams& params, const EquilibriumProfile& profile,
                              Cohort cohort);

struct ConfusionRates {
  std::array<std::optional<Rational>, 2> fnr;
  std::array<std::optional<Rational>, 2> fpr;
};
ConfusionRates ComputeConfusionRates(const ModelParams& params,
                                     const EquilibriumProfile& profile);

struct PredictiveValues {
  std::optional<Rational> ppv;
  std::optional<Rational> npv;
};
PredictiveValues ComputePredictiveValues(const ModelParams& params,
                                         const EquilibriumProfile& profile);

// Admitted High mass minus admitted Low mass, per student.
Rational CollegePayoff(const ModelParams& params, const EquilibriumProfile& profile);
Rational CollegePayoff(const ModelParams& params, const OutcomeClass& outcome);

FairnessReport ComputeFairnessReport(const ModelParams& params,
                                     const EquilibriumProfile& profile);
// Same report from per-cohort admission probabilities alone.
FairnessReport ReportFromAdmission(const ModelParams& params,
                                   const std::array<Rational, 4>& admit);

// First-score payoff minus Report Max separating payoff:
// φ̄[(α − α^k)p̄ − (ᾱ − ᾱ^k)p]. Throws GameError(kUnsupportedK) for k < 2.
Rational PayoffGap(const ModelParams& params);
Rational PayoffGapTwoTest(const ModelParams& params);  // φ̄ α ᾱ (1 − 2p)

// Closed-form predictive values of the two headline equilibria.
Rational PpvReportMaxSeparating(const ModelParams& params);
Rational NpvReportMaxSeparating(const ModelParams& params);
Rational PpvFirstScore(const ModelParams& params);
Rational NpvFirstScore(const ModelParams& params);

// Closed-form error rates, independent of p.
struct RateTable {
  std::array<Rational, 2> fnr;  // by category
  std::array<Rational, 2> fpr;
};
RateTable SeparatingMaxRates(const Rational& alpha, int k);
RateTable FirstScoreRates(const Rational& alpha);

struct PolicyReport {
  ReportingRule rule;
  EquilibriumLabel label;
  FairnessReport report;
};

struct PolicyComparison {
  std::optional<PolicyReport> max_separating;
  std::vector<PolicyReport> report_all;  // one per Report All class
  // Report All payoff minus Report Max separating payoff, per Report All
  // class; empty when either side is absent.
  std::vector<Rational> payoff_delta;
};

// Report All classes come from the analytic constructors and, for k <= 3,
// from exhaustive enumeration.
PolicyComparison ComparePolicies(const ModelParams& params);

}  // namespace scoregame

#endif  // SCOREGAME_METRICS_H_
