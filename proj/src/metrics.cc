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

#include "scoregame/metrics.h"

#include "scoregame/analytic.h"
#include "scoregame/error.h"
#include "scoregame/posterior.h"

namespace scoregame {

namespace {

std::array<Rational, 4> AdmissionByCohort(const ModelParams& params,
                                          const EquilibriumProfile& profile) {
  OutcomeDistribution dist =
      ObservedDistribution(params, profile.policy.rule(), profile.strategy);
  std::array<Rational, 4> admit;
  for (const ScoreSeq& obs : Observations(profile.policy.rule(), params.k)) {
    if (!profile.policy.AcceptsObservation(obs.Index())) continue;
    for (Cohort c : kCohorts) admit[c.Index()] += dist.Conditional(c, obs);
  }
  return admit;
}

std::optional<Rational> Ratio(const Rational& num, const Rational& den) {
  if (den == 0) return std::nullopt;
  return Rational(num / den);
}

}  // namespace

Rational AdmissionProbability(const ModelParams& params, const EquilibriumProfile& profile,
                              Cohort cohort) {
  return AdmissionByCohort(params, profile)[cohort.Index()];
}

FairnessReport ReportFromAdmission(const ModelParams& params,
                                   const std::array<Rational, 4>& admit) {
  FairnessReport r;
  Rational admitted_high = 0, admitted_low = 0, rejected_high = 0, rejected_low = 0;
  for (Cohort c : kCohorts) {
    const Rational mass = params.CohortMass(c);
    const Rational& a = admit[c.Index()];
    const int cat = static_cast<int>(c.category);
    if (c.type == StudentType::kHigh) {
      admitted_high += mass * a;
      rejected_high += mass * (1 - a);
      if (mass != 0) r.fnr[cat] = Rational(1 - a);
    } else {
      admitted_low += mass * a;
      rejected_low += mass * (1 - a);
      if (mass != 0) r.fpr[cat] = a;
    }
  }
  if (r.fnr[0] && r.fnr[1]) r.fnr_gap = Rational(*r.fnr[0] - *r.fnr[1]);
  if (r.fpr[0] && r.fpr[1]) r.fpr_gap = Rational(*r.fpr[0] - *r.fpr[1]);
  r.ppv = Ratio(admitted_high, Rational(admitted_high + admitted_low));
  r.npv = Ratio(rejected_low, Rational(rejected_high + rejected_low));
  r.college_payoff = admitted_high - admitted_low;
  return r;
}

FairnessReport ComputeFairnessReport(const ModelParams& params,
                                     const EquilibriumProfile& profile) {
  params.Validate();
  return ReportFromAdmission(params, AdmissionByCohort(params, profile));
}

ConfusionRates ComputeConfusionRates(const ModelParams& params,
                                     const EquilibriumProfile& profile) {
  FairnessReport r = ComputeFairnessReport(params, profile);
  return {r.fnr, r.fpr};
}

PredictiveValues ComputePredictiveValues(const ModelParams& params,
                                         const EquilibriumProfile& profile) {
  FairnessReport r = ComputeFairnessReport(params, profile);
  return {r.ppv, r.npv};
}

Rational CollegePayoff(const ModelParams& params, const EquilibriumProfile& profile) {
  return ComputeFairnessReport(params, profile).college_payoff;
}

Rational CollegePayoff(const ModelParams& params, const OutcomeClass& outcome) {
  Rational payoff = 0;
  for (Cohort c : kCohorts) {
    if (!outcome.admit[c.Index()]) continue;
    Rational m = params.CohortMass(c) * *outcome.admit[c.Index()];
    payoff += c.type == StudentType::kHigh ? m : Rational(-m);
  }
  return payoff;
}

Rational PayoffGap(const ModelParams& params) {
  if (params.k < 2) throw GameError(ErrorCode::kUnsupportedK, "payoff gap needs k >= 2");
  const Rational& a = params.alpha;
  const Rational b = 1 - a;
  const Rational& p = params.p;
  return Rational((1 - params.phi) *
                  ((a - Pow(a, params.k)) * (1 - p) - (b - Pow(b, params.k)) * p));
}

Rational PayoffGapTwoTest(const ModelParams& params) {
  return Rational((1 - params.phi) * params.alpha * (1 - params.alpha) * (1 - 2 * params.p));
}

Rational PpvReportMaxSeparating(const ModelParams& params) {
  const Rational& a = params.alpha;
  const Rational b = 1 - a, phi_bar = 1 - params.phi, q = 1 - params.p;
  const Rational& p = params.p;
  const Rational& phi = params.phi;
  Rational high = a * phi * p + (1 - Pow(b, params.k)) * phi_bar * p;
  Rational low = b * phi * q + (1 - Pow(a, params.k)) * phi_bar * q;
  return Rational(high / (high + low));
}

Rational NpvReportMaxSeparating(const ModelParams& params) {
  const Rational& a = params.alpha;
  const Rational b = 1 - a, phi_bar = 1 - params.phi, q = 1 - params.p;
  const Rational& p = params.p;
  const Rational& phi = params.phi;
  Rational low = a * phi * q + Pow(a, params.k) * phi_bar * q;
  Rational high = b * phi * p + Pow(b, params.k) * phi_bar * p;
  return Rational(low / (low + high));
}

Rational PpvFirstScore(const ModelParams& params) {
  const Rational& a = params.alpha;
  const Rational& p = params.p;
  return Rational(a * p / (a * p + (1 - a) * (1 - p)));
}

Rational NpvFirstScore(const ModelParams& params) {
  const Rational& a = params.alpha;
  const Rational& p = params.p;
  return Rational((1 - p) * a / (p * (1 - a) + (1 - p) * a));
}

RateTable SeparatingMaxRates(const Rational& alpha, int k) {
  Rational b = 1 - alpha;
  return RateTable{{b, Pow(b, k)}, {b, Rational(1 - Pow(alpha, k))}};
}

RateTable FirstScoreRates(const Rational& alpha) {
  Rational b = 1 - alpha;
  return RateTable{{b, b}, {b, b}};
}

PolicyComparison ComparePolicies(const ModelParams& params) {
  params.Validate();
  PolicyComparison out;
  if (std::optional<EquilibriumProfile> sep = ReportMaxSeparating(params)) {
    out.max_separating =
        PolicyReport{ReportingRule::kReportMax, sep->label, ComputeFairnessReport(params, *sep)};
  }
  if (params.k <= kMaxLpTests) {
    PolicyScope scope =
        params.k <= kMaxExhaustiveTests ? PolicyScope::kReportAll : PolicyScope::kFamilies;
    EnumerationOptions options;
    options.witness_intervals = false;
    EnumerationResult found = EnumerateOutcomes(params, scope, options);
    for (const OutcomeEntry& e : found.classes) {
      out.report_all.push_back(
          PolicyReport{e.rule, e.label, ComputeFairnessReport(params, e.witness)});
    }
  } else if (params.p >= 1 - params.alpha && params.p <= params.alpha) {
    EquilibriumProfile fs = ConstructFirstScoreEquilibrium(params);
    out.report_all.push_back(
        PolicyReport{ReportingRule::kReportAll, fs.label, ComputeFairnessReport(params, fs)});
  }
  if (out.max_separating) {
    for (const PolicyReport& r : out.report_all) {
      out.payoff_delta.push_back(r.report.college_payoff -
                                 out.max_separating->report.college_payoff);
    }
  }
  return out;
}

}  // namespace scoregame
