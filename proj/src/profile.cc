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

#include "scoregame/profile.h"

#include "scoregame/error.h"

namespace scoregame {

const char* RuleName(ReportingRule rule) {
  return rule == ReportingRule::kReportAll ? "report_all" : "report_max";
}

ScoreSeq Observe(ReportingRule rule, const ScoreSeq& seq) {
  if (rule == ReportingRule::kReportAll) return seq;
  return ScoreSeq(seq.ContainsA() ? Score::kA : Score::kB);
}

int ObservationCount(ReportingRule rule, int k) {
  return rule == ReportingRule::kReportAll ? SequenceCount(k) : 2;
}

std::vector<ScoreSeq> Observations(ReportingRule rule, int k) {
  return AllSequences(rule == ReportingRule::kReportAll ? k : 1);
}

AdmissionPolicy::AdmissionPolicy(ReportingRule rule, int k)
    : rule_(rule), k_(k), accept_(ObservationCount(rule, k), false) {
  if (k < 1 || k > ModelParams::kMaxTests) {
    throw GameError(ErrorCode::kMalformed, "policy k out of range");
  }
}

AdmissionPolicy AdmissionPolicy::FromMask(ReportingRule rule, int k,
                                          std::uint64_t mask) {
  AdmissionPolicy policy(rule, k);
  if (policy.observation_count() > 64) {
    throw GameError(ErrorCode::kMalformed, "mask too narrow for this k");
  }
  for (int i = 0; i < policy.observation_count(); ++i) {
    policy.accept_[i] = (mask >> i) & 1u;
  }
  return policy;
}

AdmissionPolicy AdmissionPolicy::FromPredicate(
    ReportingRule rule, int k, const std::function<bool(const ScoreSeq&)>& accept) {
  AdmissionPolicy policy(rule, k);
  for (const ScoreSeq& obs : Observations(rule, k)) {
    policy.accept_[obs.Index()] = accept(obs);
  }
  return policy;
}

void AdmissionPolicy::Set(const ScoreSeq& observation, bool accept) {
  if (observation.empty() || observation.Index() >= observation_count()) {
    throw GameError(ErrorCode::kMalformed,
                    "'" + observation.ToString() + "' is not an observation");
  }
  accept_[observation.Index()] = accept;
}

std::vector<ScoreSeq> AdmissionPolicy::AcceptedObservations() const {
  std::vector<ScoreSeq> out;
  for (int i = 0; i < observation_count(); ++i) {
    if (accept_[i]) out.push_back(ScoreSeq::FromIndex(i));
  }
  return out;
}

std::string AdmissionPolicy::ToString() const {
  std::string out = "accept{";
  bool first = true;
  for (const ScoreSeq& s : AcceptedObservations()) {
    if (!first) out += ',';
    out += s.ToString();
    first = false;
  }
  out += '}';
  return out;
}

std::string EquilibriumLabel::ToString() const {
  switch (kind) {
    case EquilibriumKind::kSeparating:
      return "separating";
    case EquilibriumKind::kRejectAll:
      return "reject_all";
    case EquilibriumKind::kAcceptAll:
      return "accept_all";
    case EquilibriumKind::kFirstScore:
      return "first_score";
    case EquilibriumKind::kNonFirstScore:
      return n > 0 ? "non_first_score(" + std::to_string(n) + ")" : "non_first_score";
    case EquilibriumKind::kOther:
      return "other";
  }
  return "other";
}

}  // namespace scoregame
