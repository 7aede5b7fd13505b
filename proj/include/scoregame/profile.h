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

#ifndef SCOREGAME_PROFILE_H_
#define SCOREGAME_PROFILE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scoregame/model.h"
#include "scoregame/rational.h"

namespace scoregame {

// What the College gets to see. Under kReportMax the observation is the best
// score only; under kReportAll it is the full ordered sequence.
enum class ReportingRule { kReportAll, kReportMax };

const char* RuleName(ReportingRule rule);  // "report_all" / "report_max"

// Observations are themselves score sequences: the sequence itself under
// Report All, the best single score under Report Max.
ScoreSeq Observe(ReportingRule rule, const ScoreSeq& seq);
int ObservationCount(ReportingRule rule, int k);
std::vector<ScoreSeq> Observations(ReportingRule rule, int k);

// The College's deterministic accept/reject indicator per observation.
class AdmissionPolicy {
 public:
  // Starts out rejecting everything.
  AdmissionPolicy(ReportingRule rule, int k);

  // Bit i of mask accepts the observation with index i.
  static AdmissionPolicy FromMask(ReportingRule rule, int k, std::uint64_t mask);
  static AdmissionPolicy FromPredicate(ReportingRule rule, int k,
                                       const std::function<bool(const ScoreSeq&)>& accept);

  ReportingRule rule() const { return rule_; }
  int k() const { return k_; }
  int observation_count() const { return static_cast<int>(accept_.size()); }

  bool Accepts(const ScoreSeq& seq) const { return accept_[Observe(rule_, seq).Index()]; }
  bool AcceptsObservation(int index) const { return accept_[index]; }
  void Set(const ScoreSeq& observation, bool accept);

  std::vector<ScoreSeq> AcceptedObservations() const;
  // "accept{A,AA,AB}" style.
  std::string ToString() const;

  friend bool operator==(const AdmissionPolicy&, const AdmissionPolicy&) = default;

 private:
  ReportingRule rule_;
  int k_;
  std::vector<bool> accept_;
};

// The College's posterior per observation (indexed like the policy). nullopt
// marks an observation with zero equilibrium mass; off_path_assignment then
// holds the belief chosen to support the policy there.
struct Beliefs {
  std::vector<std::optional<Rational>> posterior;
  std::vector<std::optional<Rational>> off_path_assignment;

  bool OnPath(int observation) const { return posterior[observation].has_value(); }
};

enum class EquilibriumKind {
  kSeparating,
  kRejectAll,
  kAcceptAll,
  kFirstScore,
  kNonFirstScore,
  kOther,
};

struct EquilibriumLabel {
  EquilibriumKind kind = EquilibriumKind::kOther;
  // For kNonFirstScore: length of the admitted B A...A sequence when known
  // (0 otherwise).
  int n = 0;

  std::string ToString() const;  // "first_score", "non_first_score(3)", ...
  friend bool operator==(const EquilibriumLabel&, const EquilibriumLabel&) = default;
};

// Range of the unconditional continuation probability at an indifferent
// history over all supporting strategies. For single-score histories this is
// exactly the probability of retaking.
struct StrategyInterval {
  StudentType type;
  ScoreSeq history;
  Rational low;
  Rational high;
};

struct EquilibriumProfile {
  AdmissionPolicy policy;
  StudentStrategy strategy;
  Beliefs beliefs;
  EquilibriumLabel label;
  std::vector<StrategyInterval> free_intervals;
};

}  // namespace scoregame

#endif  // SCOREGAME_PROFILE_H_
