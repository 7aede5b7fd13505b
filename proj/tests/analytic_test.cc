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

#include "scoregame/analytic.h"
#include "scoregame/error.h"
#include "scoregame/search.h"

namespace scoregame {
namespace {

const Rational kAlpha(4, 5);

ModelParams At(const char* p, int k = 2, const char* phi = "0.5", const char* alpha = "0.8") {
  return ModelParams::Parse(p, alpha, phi, k);
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST_CASE("report max thresholds at the reference point") {
  ThresholdPair t = ReportMaxThresholds(At("0.3"));
  CHECK(t.lower == Rational(7, 29));
  CHECK(t.upper == Rational(6, 7));
  CHECK(ReportMaxLowerTwoTest(kAlpha, Rational(1, 2)) == t.lower);
  CHECK(RejectAllThreshold(kAlpha, Rational(1, 2)) == Rational(7, 27));
}

TEST_CASE("thresholds with a single test collapse to the one-shot cutoffs") {
  ThresholdPair t = ReportMaxThresholds(At("0.3", 1));
  CHECK(t.lower == Rational(1, 5));
  CHECK(t.upper == kAlpha);
  ThresholdPair all_single = ReportMaxThresholds(At("0.3", 3, "1"));
  CHECK(all_single.lower == Rational(1, 5));
  CHECK(all_single.upper == kAlpha);
}

TEST_CASE("non-first-score and payoff-parity thresholds") {
  CHECK(NonFirstScoreThreshold(2, kAlpha) == Rational(1, 2));
  CHECK(NonFirstScoreThreshold(3, kAlpha) == Rational(1, 5));
  CHECK(NonFirstScoreThreshold(4, kAlpha) == Rational(1, 17));
  CHECK(PayoffParityThreshold(2, kAlpha) == Rational(1, 2));
  CHECK(PayoffParityThreshold(3, kAlpha) == Rational(3, 5));
  CHECK(PayoffParityThreshold(3, 1) == Rational(2, 3));
  CHECK(CodeOf([] { NonFirstScoreThreshold(1, kAlpha); }) == ErrorCode::kUnsupportedK);
  CHECK(CodeOf([] { PayoffParityThreshold(1, kAlpha); }) == ErrorCode::kUnsupportedK);
}

TEST_CASE("region bookkeeping merges and clips") {
  Region r;
  r.Add(Rational(1, 2), Rational(3, 4));
  r.Add(Rational(-1), Rational(1, 10));
  r.Add(Rational(7, 10), Rational(9, 10));
  REQUIRE(r.intervals().size() == 2u);
  CHECK(r.intervals()[0].lo == 0);
  CHECK(r.intervals()[1].hi == Rational(9, 10));
  CHECK(r.Contains(Rational(4, 5)));
  CHECK_FALSE(r.Contains(Rational(1, 5)));
  CHECK(r.IsEndpoint(Rational(1, 2)));
  r.Add(Rational(3, 5), Rational(1, 5));
  CHECK(r.intervals().size() == 2u);
}

TEST_CASE("report all regions") {
  ReportAllRegions r = ComputeReportAllRegions(At("0.3", 2));
  CHECK(r.first_score_exists);
  CHECK(r.first_score.lo == Rational(1, 5));
  CHECK(r.first_score.hi == kAlpha);
  CHECK_FALSE(r.non_first_score_exists);
  CHECK(ComputeReportAllRegions(At("0.6", 3)).non_first_score_exists);
  CHECK(ComputeReportAllRegions(At("0.1", 3)).non_first_score_exists);
  CHECK_FALSE(ComputeReportAllRegions(At("0.9", 3)).first_score_exists);
}

TEST_CASE("separating construction inside and outside its region") {
  std::optional<EquilibriumProfile> sep = ReportMaxSeparating(At("0.3"));
  REQUIRE(sep);
  CHECK(sep->label.kind == EquilibriumKind::kSeparating);
  CHECK(sep->policy.ToString() == "accept{A}");
  CHECK(VerifyEquilibrium(At("0.3"), *sep).ok);
  CHECK_FALSE(ReportMaxSeparating(At("0.2")));
  CHECK_FALSE(ReportMaxSeparating(At("0.9")));
  ThresholdPair t = ReportMaxThresholds(At("0.3"));
  ModelParams lo{t.lower, kAlpha, Rational(1, 2), 2};
  REQUIRE(ReportMaxSeparating(lo));
  CHECK(VerifyEquilibrium(lo, *ReportMaxSeparating(lo)).ok);
}

TEST_CASE("reject-all region at k two") {
  std::optional<RejectAllRegion> r = ReportMaxRejectAll(At("0.25"));
  REQUIRE(r);
  CHECK(r->threshold() == Rational(7, 27));
  Interval low = r->XLow(0);
  CHECK(low.lo <= low.hi);
  EquilibriumProfile p = BuildReportMaxRejectAll(At("0.25"), 0, low.lo);
  CHECK(p.label.kind == EquilibriumKind::kRejectAll);
  CHECK(VerifyEquilibrium(At("0.25"), p).ok);
  CHECK_FALSE(ReportMaxRejectAll(At("0.3")));
  CHECK(CodeOf([] { ReportMaxRejectAll(At("0.25", 3)); }) == ErrorCode::kUnsupportedK);
}

TEST_CASE("first-score construction") {
  for (const char* p : {"0.2", "0.3", "0.5", "0.8"}) {
    for (int k : {2, 3, 4}) {
      ModelParams m = At(p, k);
      EquilibriumProfile fs = ConstructFirstScoreEquilibrium(m);
      CHECK(fs.label.kind == EquilibriumKind::kFirstScore);
      CHECK(VerifyEquilibrium(m, fs).ok);
    }
  }
  CHECK(CodeOf([] { ConstructFirstScoreEquilibrium(At("0.1")); }) == ErrorCode::kNoEquilibrium);
}

TEST_CASE("non-first-score construction") {
  ModelParams m = At("0.6", 3);
  std::optional<EquilibriumProfile> n2 = ConstructNonFirstScoreEquilibrium(m, 2);
  REQUIRE(n2);
  CHECK(n2->policy.ToString() == "accept{A,AA,AB,BA,AAA,AAB,ABA,ABB}");
  CHECK(n2->label.kind == EquilibriumKind::kNonFirstScore);
  CHECK(n2->label.n == 2);
  CHECK(VerifyEquilibrium(m, *n2).ok);

  ModelParams low = At("0.3", 3);
  std::optional<EquilibriumProfile> n3 = ConstructNonFirstScoreEquilibrium(low, 3);
  REQUIRE(n3);
  CHECK(VerifyEquilibrium(low, *n3).ok);
  CHECK_FALSE(ConstructNonFirstScoreEquilibrium(low, 2));
  ModelParams mid = At("0.45", 3);
  std::optional<EquilibriumProfile> mid3 = ConstructNonFirstScoreEquilibrium(mid, 3);
  REQUIRE(mid3);
  CHECK(mid3->policy.Accepts(ScoreSeq::Parse("BAA")));
  CHECK_FALSE(mid3->policy.Accepts(ScoreSeq::Parse("BA")));
  CHECK(VerifyEquilibrium(mid, *mid3).ok);
  CHECK_FALSE(ConstructNonFirstScoreEquilibrium(At("0.3", 2), 2));
  CHECK(CodeOf([&] { ConstructNonFirstScoreEquilibrium(m, 4); }) == ErrorCode::kBadIndex);
  CHECK(CodeOf([&] { ConstructNonFirstScoreEquilibrium(m, 1); }) == ErrorCode::kBadIndex);
}

TEST_CASE("critical priors") {
  CHECK(IsCriticalPrior(At("0.5")));
  CHECK(IsCriticalPrior(At("0.2")));
  CHECK(IsCriticalPrior(At("0.6", 3)));
  CHECK_FALSE(IsCriticalPrior(At("0.3")));
}

}  // namespace
}  // namespace scoregame
