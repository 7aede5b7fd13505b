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

#include "doctest.h"

#include <set>

#include "scoregame/analytic.h"
#include "scoregame/error.h"
#include "scoregame/posterior.h"
#include "scoregame/search.h"

namespace scoregame {
namespace {

ModelParams At(const char* p, int k = 2, const char* phi = "0.5", const char* alpha = "0.8") {
  return ModelParams::Parse(p, alpha, phi, k);
}

std::vector<std::string> Labels(const EnumerationResult& r) {
  std::vector<std::string> out;
  for (const OutcomeEntry& e : r.classes) out.push_back(e.label.ToString());
  return out;
}

TEST_CASE("best response under accept-A-only") {
  ModelParams m = At("0.3", 2);
  AdmissionPolicy accept_a = AdmissionPolicy::FromPredicate(
      ReportingRule::kReportAll, 2, [](const ScoreSeq& s) { return s.ToString() == "A"; });
  BestResponseSet br = BestResponse(m, accept_a);
  CHECK(br.Choice(StudentType::kHigh, ScoreSeq::Parse("A")) == StopChoice::kStop);
  CHECK(br.Choice(StudentType::kLow, ScoreSeq::Parse("B")) == StopChoice::kEither);
  CHECK(br.Value(StudentType::kHigh, ScoreSeq::Parse("A")) == 1);
  CHECK(br.RootValue(m, StudentType::kHigh) == Rational(4, 5));

  AdmissionPolicy accept_ba = AdmissionPolicy::FromPredicate(
      ReportingRule::kReportAll, 2, [](const ScoreSeq& s) { return s.ToString() == "BA"; });
  BestResponseSet br2 = BestResponse(m, accept_ba);
  CHECK(br2.Choice(StudentType::kHigh, ScoreSeq::Parse("B")) == StopChoice::kContinue);
  CHECK(br2.Value(StudentType::kLow, ScoreSeq::Parse("B")) == Rational(1, 5));
  CHECK(br2.Allows(StudentType::kHigh, ScoreSeq::Parse("A"), Rational(1, 2)));
  CHECK_FALSE(br2.Allows(StudentType::kHigh, ScoreSeq::Parse("B"), 1));
}

TEST_CASE("verification catches a non-best-response strategy") {
  ModelParams m = At("0.3", 2);
  EquilibriumProfile fs = BuildFirstScore(m);
  CHECK(VerifyEquilibrium(m, fs).ok);
  EquilibriumProfile bad = fs;
  bad.policy.Set(ScoreSeq::Parse("BA"), true);
  bad.beliefs = ComputeBeliefs(m, bad.policy, bad.strategy);
  Verdict v = VerifyEquilibrium(m, bad);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.violations.empty());
}

TEST_CASE("verification catches an unsupported acceptance") {
  ModelParams m = At("0.3", 2);
  EquilibriumProfile sep = *ReportMaxSeparating(m);
  EquilibriumProfile bad = sep;
  bad.policy.Set(ScoreSeq::Parse("B"), true);
  bad.beliefs = ComputeBeliefs(m, bad.policy, bad.strategy);
  CHECK_FALSE(VerifyEquilibrium(m, bad).ok);
}

TEST_CASE("verification rejects malformed profiles") {
  ModelParams m = At("0.3", 2);
  EquilibriumProfile fs = BuildFirstScore(m);
  CHECK_THROWS_AS(VerifyEquilibrium(At("0.3", 3), fs), GameError);
  EquilibriumProfile gap = fs;
  gap.strategy = StudentStrategy(2);
  CHECK_THROWS_AS(VerifyEquilibrium(m, gap), GameError);
}

TEST_CASE("tolerance mode accepts a perturbed but near-indifferent profile") {
  ModelParams m = At("0.3", 2);
  EquilibriumProfile fs = BuildFirstScore(m);
  VerifyOptions tol{VerifyMode::kTolerance, 1e-9};
  CHECK(VerifyEquilibrium(m, fs, tol).ok);
}

TEST_CASE("outcome classification") {
  ModelParams m = At("0.3", 3);
  OutcomeClass fs = ComputeOutcomeClass(m, BuildFirstScore(m).policy);
  CHECK(ClassifyOutcome(m, ReportingRule::kReportAll, fs) == EquilibriumKind::kFirstScore);
  OutcomeClass sep = ComputeOutcomeClass(m, BuildReportMaxSeparating(m).policy);
  CHECK(ClassifyOutcome(m, ReportingRule::kReportMax, sep) == EquilibriumKind::kSeparating);
  CHECK(*sep.admit[3] == Rational(61, 125));
  OutcomeClass none = ComputeOutcomeClass(m, AdmissionPolicy(ReportingRule::kReportAll, 3));
  CHECK(ClassifyOutcome(m, ReportingRule::kReportAll, none) == EquilibriumKind::kRejectAll);
  OutcomeClass zero = ComputeOutcomeClass(At("0.3", 3, "1"), BuildFirstScore(m).policy);
  CHECK_FALSE(zero.admit[2].has_value());
}

TEST_CASE("unique first-score class at the reference point") {
  EnumerationResult r = EnumerateOutcomes(At("0.3", 2), PolicyScope::kReportAll);
  CHECK(r.policies_examined == 64);
  CHECK(Labels(r) == std::vector<std::string>{"first_score"});
  CHECK(r.classes[0].outcome == ComputeOutcomeClass(At("0.3", 2), BuildFirstScore(At("0.3", 2)).policy));
  CHECK(VerifyEquilibrium(At("0.3", 2), r.classes[0].witness).ok);
}

TEST_CASE("report max admits separating and reject-all at p one quarter") {
  EnumerationResult r = EnumerateOutcomes(At("0.25", 2), PolicyScope::kReportMax);
  CHECK(Labels(r) == std::vector<std::string>{"separating", "reject_all"});
  EnumerationResult above = EnumerateOutcomes(At("0.3", 2), PolicyScope::kReportMax);
  CHECK(Labels(above) == std::vector<std::string>{"separating"});
}

TEST_CASE("several report all classes coexist at k three") {
  EnumerationResult r = EnumerateOutcomes(At("0.6", 3), PolicyScope::kReportAll);
  CHECK(r.policies_examined == 16384);
  CHECK(r.classes.size() >= 2u);
  CHECK(r.HasKind(EquilibriumKind::kFirstScore));
  CHECK(r.HasKind(EquilibriumKind::kNonFirstScore));
  CHECK(r.boundary);
  for (const OutcomeEntry& e : r.classes) CHECK(VerifyEquilibrium(At("0.6", 3), e.witness).ok);
}

TEST_CASE("witness intervals bracket the witness strategy") {
  ModelParams m = At("0.25", 2);
  EnumerationResult r = EnumerateOutcomes(m, PolicyScope::kReportMax);
  for (const OutcomeEntry& e : r.classes) {
    for (const StrategyInterval& iv : e.witness.free_intervals) CHECK(iv.low <= iv.high);
  }
}

TEST_CASE("scope limits and parsing") {
  try {
    EnumerateOutcomes(At("0.3", 4), PolicyScope::kReportAll);
    FAIL("expected ScopeTooLarge");
  } catch (const GameError& e) {
    CHECK(e.code() == ErrorCode::kScopeTooLarge);
  }
  CHECK_NOTHROW(EnumerateOutcomes(At("0.3", 4), PolicyScope::kFamilies));
  CHECK(ParseScope("families") == PolicyScope::kFamilies);
  CHECK_THROWS_AS(ParseScope("everything"), GameError);
  CHECK(FamilyPolicies(3).size() == 3u + 2u + 2u);
}

TEST_CASE("families scope finds the canonical classes at k four") {
  ModelParams m = At("0.3", 4);
  EnumerationResult r = EnumerateOutcomes(m, PolicyScope::kFamilies);
  CHECK(r.HasKind(EquilibriumKind::kFirstScore));
  for (const OutcomeEntry& e : r.classes) CHECK(VerifyEquilibrium(m, e.witness).ok);
}

// Independent oracle for k = 2: every admission policy crossed with a grid of
// stop probabilities, each profile checked by VerifyEquilibrium directly. Each
// class found this way must be among the enumerated ones.
std::set<OutcomeClass> GridClasses(const ModelParams& m) {
  std::set<OutcomeClass> found;
  const ScoreSeq a = ScoreSeq::Parse("A"), b = ScoreSeq::Parse("B");
  std::vector<Rational> grid = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    AdmissionPolicy policy = AdmissionPolicy::FromMask(ReportingRule::kReportAll, 2, mask);
    for (const Rational& ha : grid)
      for (const Rational& hb : grid)
        for (const Rational& la : grid)
          for (const Rational& lb : grid) {
            StudentStrategy s(2);
            s.Set(StudentType::kHigh, a, ha);
            s.Set(StudentType::kHigh, b, hb);
            s.Set(StudentType::kLow, a, la);
            s.Set(StudentType::kLow, b, lb);
            EquilibriumProfile profile{policy, s, ComputeBeliefs(m, policy, s), {}, {}};
            if (VerifyEquilibrium(m, profile).ok) found.insert(ComputeOutcomeClass(m, policy));
          }
  }
  return found;
}

TEST_CASE("k two enumeration contains every grid-verified class") {
  for (const char* p : {"0.15", "0.3", "0.45", "0.7", "0.9"}) {
    for (const char* phi : {"0", "0.5"}) {
      ModelParams m = At(p, 2, phi);
      EnumerationResult r = EnumerateOutcomes(m, PolicyScope::kReportAll);
      std::set<OutcomeClass> enumerated;
      for (const OutcomeEntry& e : r.classes) enumerated.insert(e.outcome);
      for (const OutcomeClass& c : GridClasses(m)) {
        CAPTURE(m.ToString());
        CAPTURE(c.ToString());
        CHECK(enumerated.count(c) == 1);
      }
    }
  }
}

}  // namespace
}  // namespace scoregame
