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

#ifndef SCOREGAME_POSTERIOR_H_
#define SCOREGAME_POSTERIOR_H_

#include <optional>

#include "scoregame/model.h"
#include "scoregame/profile.h"
#include "scoregame/rational.h"

namespace scoregame {

// Pr(High | seq). nullopt when seq carries no mass (off path).
std::optional<Rational> Posterior(const ModelParams& params,
                                  const StudentStrategy& strategy,
                                  const ScoreSeq& seq);
std::optional<Rational> Posterior(const OutcomeDistribution& dist, const ScoreSeq& seq);

// Share of High among everyone whose reported sequence starts with prefix.
// When nobody does, value is 0 and empty is set.
struct PrefixBelief {
  ScoreSeq prefix;
  Rational value;
  bool empty = false;
};

PrefixBelief ComputePrefixBelief(const ModelParams& params,
                                 const StudentStrategy& strategy,
                                 const ScoreSeq& prefix);
PrefixBelief ComputePrefixBelief(const OutcomeDistribution& dist, const ScoreSeq& prefix);

template <typename T>
T IntPow(const T& base, int exponent) {
  T result(1);
  for (int i = 0; i < exponent; ++i) result = T(result * base);
  return result;
}

// Posterior on the best reported score when Category 2 retakes until A.
template <typename T>
T PosteriorMaxValue(const T& p, const T& alpha, const T& phi, int k, Score best) {
  const T one(1);
  const T a_bar = T(one - alpha);
  const T phi_bar = T(one - phi);
  T high, low;
  if (best == Score::kA) {
    high = T(alpha * phi + (one - IntPow(a_bar, k)) * phi_bar);
    low = T(a_bar * phi + (one - IntPow(alpha, k)) * phi_bar);
  } else {
    high = T(a_bar * phi + IntPow(a_bar, k) * phi_bar);
    low = T(alpha * phi + IntPow(alpha, k) * phi_bar);
  }
  T num = T(p * high);
  return T(num / (num + (one - p) * low));
}

Rational PosteriorMax(const ModelParams& params, Score best);

enum class CollegeChoice { kReject, kAccept, kEither };

// Accept above 1/2, reject below, either at exactly 1/2.
CollegeChoice CollegeRule(const Rational& posterior);
// Floating counterpart with a symmetric indifference band.
CollegeChoice CollegeRule(double posterior, double band);

// Posterior per observation of the policy's reporting rule under strategy,
// with off-path observations assigned 1 if accepted and 0 if rejected.
Beliefs ComputeBeliefs(const ModelParams& params, const AdmissionPolicy& policy,
                       const StudentStrategy& strategy);

// Distribution over observations (sequences, or best scores under Report Max).
OutcomeDistribution ObservedDistribution(const ModelParams& params, ReportingRule rule,
                                         const StudentStrategy& strategy);

}  // namespace scoregame

#endif  // SCOREGAME_POSTERIOR_H_
