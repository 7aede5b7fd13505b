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

#include "scoregame/posterior.h"

#include <cmath>

namespace scoregame {

std::optional<Rational> Posterior(const OutcomeDistribution& dist, const ScoreSeq& seq) {
  if (seq.empty() || seq.length() > dist.max_length()) return std::nullopt;
  Rational high = dist.TypeMass(StudentType::kHigh, seq);
  Rational total = high + dist.TypeMass(StudentType::kLow, seq);
  if (total == 0) return std::nullopt;
  return Rational(high / total);
}

std::optional<Rational> Posterior(const ModelParams& params,
                                  const StudentStrategy& strategy,
                                  const ScoreSeq& seq) {
  return Posterior(ComputeOutcomeDistribution(params, strategy), seq);
}

PrefixBelief ComputePrefixBelief(const OutcomeDistribution& dist, const ScoreSeq& prefix) {
  PrefixBelief out{prefix, Rational(0), true};
  Rational high = 0, total = 0;
  for (const ScoreSeq& seq : AllSequences(dist.max_length())) {
    if (!seq.StartsWith(prefix)) continue;
    Rational h = dist.TypeMass(StudentType::kHigh, seq);
    high += h;
    total += h + dist.TypeMass(StudentType::kLow, seq);
  }
  if (total != 0) {
    out.value = high / total;
    out.empty = false;
  }
  return out;
}

PrefixBelief ComputePrefixBelief(const ModelParams& params,
                                 const StudentStrategy& strategy,
                                 const ScoreSeq& prefix) {
  return ComputePrefixBelief(ComputeOutcomeDistribution(params, strategy), prefix);
}

Rational PosteriorMax(const ModelParams& params, Score best) {
  params.Validate();
  return PosteriorMaxValue<Rational>(params.p, params.alpha, params.phi, params.k, best);
}

CollegeChoice CollegeRule(const Rational& posterior) {
  int c = cmp(posterior, Rational(1, 2));
  if (c > 0) return CollegeChoice::kAccept;
  if (c < 0) return CollegeChoice::kReject;
  return CollegeChoice::kEither;
}

CollegeChoice CollegeRule(double posterior, double band) {
  if (std::fabs(posterior - 0.5) <= band) return CollegeChoice::kEither;
  return posterior > 0.5 ? CollegeChoice::kAccept : CollegeChoice::kReject;
}

OutcomeDistribution ObservedDistribution(const ModelParams& params, ReportingRule rule,
                                         const StudentStrategy& strategy) {
  OutcomeDistribution dist = ComputeOutcomeDistribution(params, strategy);
  if (rule == ReportingRule::kReportAll) return dist;
  return ProjectToBestScore(params, dist);
}

Beliefs ComputeBeliefs(const ModelParams& params, const AdmissionPolicy& policy,
                       const StudentStrategy& strategy) {
  OutcomeDistribution dist = ObservedDistribution(params, policy.rule(), strategy);
  Beliefs beliefs;
  beliefs.posterior.resize(policy.observation_count());
  beliefs.off_path_assignment.resize(policy.observation_count());
  for (const ScoreSeq& obs : Observations(policy.rule(), policy.k())) {
    int i = obs.Index();
    beliefs.posterior[i] = Posterior(dist, obs);
    if (!beliefs.posterior[i]) {
      beliefs.off_path_assignment[i] = Rational(policy.AcceptsObservation(i) ? 1 : 0);
    }
  }
  return beliefs;
}

}  // namespace scoregame
