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

#ifndef SCOREGAME_SEARCH_H_
#define SCOREGAME_SEARCH_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scoregame/model.h"
#include "scoregame/profile.h"
#include "scoregame/rational.h"

namespace scoregame {

enum class StopChoice { kStop, kContinue, kEither };

const char* StopChoiceName(StopChoice c);

// Admissible stop probabilities per (type, history) and the optimal
// admission probability from each history on.
class BestResponseSet {
 public:
  BestResponseSet(int k);

  int k() const { return k_; }
  StopChoice Choice(StudentType t, const ScoreSeq& history) const;
  // Optimal admission probability once history has been realized.
  const Rational& Value(StudentType t, const ScoreSeq& history) const;
  // Admission probability of a Category 2 student before the first test.
  Rational RootValue(const ModelParams& params, StudentType t) const;
  bool Allows(StudentType t, const ScoreSeq& history, const Rational& stop) const;

  void Set(StudentType t, const ScoreSeq& history, StopChoice choice, Rational value);

 private:
  int k_;
  std::array<std::vector<StopChoice>, 2> choice_;
  std::array<std::vector<Rational>, 2> value_;
};

BestResponseSet BestResponse(const ModelParams& params, const AdmissionPolicy& policy);

enum class VerifyMode { kExact, kTolerance };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kExact;
  double epsilon = 1e-9;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
  // Off-path acceptances and rejections, which any belief in [0, 1] supports.
  std::vector<std::string> notes;
};

// Throws GameError(kMalformed) when the profile does not fit the parameters
// or leaves a reachable history without a stop probability.
Verdict VerifyEquilibrium(const ModelParams& params, const EquilibriumProfile& profile,
                          const VerifyOptions& options = {});

// Admission probability per cohort, indexed by Cohort::Index(). Cohorts with
// zero mass carry nullopt.
struct OutcomeClass {
  std::array<std::optional<Rational>, 4> admit;

  std::string ToString() const;
  friend bool operator==(const OutcomeClass&, const OutcomeClass&) = default;
};

bool operator<(const OutcomeClass& a, const OutcomeClass& b);

OutcomeClass ComputeOutcomeClass(const ModelParams& params, const AdmissionPolicy& policy);
EquilibriumKind ClassifyOutcome(const ModelParams& params, ReportingRule rule,
                                const OutcomeClass& outcome);

enum class PolicyScope { kReportAll, kReportMax, kFamilies };

const char* ScopeName(PolicyScope scope);  // "report-all", "report-max", "families"
PolicyScope ParseScope(const std::string& text);

// The named Report All families used beyond exhaustive range.
std::vector<AdmissionPolicy> FamilyPolicies(int k);

struct EnumerationOptions {
  bool collect_profiles = false;
  // Min/max continuation masses for each witness.
  bool witness_intervals = true;
  int workers = 0;  // 0: hardware concurrency
};

struct OutcomeEntry {
  ReportingRule rule;
  OutcomeClass outcome;
  EquilibriumLabel label;
  EquilibriumProfile witness;
  int supporting_policies = 0;
};

struct EnumerationResult {
  PolicyScope scope;
  std::vector<OutcomeEntry> classes;  // canonical order
  long policies_examined = 0;
  long profiles_verified = 0;
  // p sits on a threshold where existence may switch.
  bool boundary = false;
  std::vector<EquilibriumProfile> profiles;  // when collect_profiles

  bool HasKind(EquilibriumKind kind) const;
};

// Exhaustive Report All scope needs k <= 3; Report Max and families scopes
// need k <= kMaxLpTests. Otherwise GameError(kScopeTooLarge).
constexpr int kMaxExhaustiveTests = 3;
constexpr int kMaxLpTests = 8;

EnumerationResult EnumerateOutcomes(const ModelParams& params, PolicyScope scope,
                                    const EnumerationOptions& options = {});

// Whether some strategy makes (policy, strategy) an equilibrium; the witness
// is returned when one exists.
std::optional<EquilibriumProfile> SupportPolicy(const ModelParams& params,
                                                const AdmissionPolicy& policy,
                                                bool intervals = false);

}  // namespace scoregame

#endif  // SCOREGAME_SEARCH_H_
