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

#include <cmath>
#include <random>

#include "scoregame/analytic.h"
#include "scoregame/metrics.h"
#include "scoregame/posterior.h"
#include "scoregame/search.h"

namespace scoregame {
namespace {

std::vector<Rational> Steps(int lo, int hi, int den) {
  std::vector<Rational> out;
  for (int i = lo; i <= hi; ++i) {
    Rational r(i, den);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

TEST_CASE("first-score parity holds everywhere it exists") {
  for (const Rational& alpha : Steps(11, 20, 20)) {
    for (const Rational& phi : Steps(0, 4, 4)) {
      for (int k = 2; k <= 5; ++k) {
        for (const Rational& p : Steps(1, 19, 20)) {
          if (p < 1 - alpha || p > alpha) continue;
          ModelParams m{p, alpha, phi, k};
          FairnessReport r = ComputeFairnessReport(m, BuildFirstScore(m));
          if (phi == 0 || phi == 1) {
            CHECK_FALSE(r.fnr_gap.has_value());
            continue;
          }
          CHECK(*r.fnr_gap == 0);
          CHECK(*r.fpr_gap == 0);
        }
      }
    }
  }
}

TEST_CASE("best-score posteriors cross one half at the thresholds") {
  for (const Rational& alpha : Steps(11, 19, 20)) {
    for (const Rational& phi : Steps(0, 4, 4)) {
      for (int k : {2, 3, 4}) {
        ModelParams m{Rational(1, 2), alpha, phi, k};
        ThresholdPair t = ReportMaxThresholds(m);
        m.p = t.lower;
        CHECK(PosteriorMax(m, Score::kA) == Rational(1, 2));
        m.p = t.upper;
        CHECK(PosteriorMax(m, Score::kB) == Rational(1, 2));
        CHECK(t.lower < Rational(1, 2));
        CHECK(t.upper > Rational(1, 2));
      }
    }
  }
}

TEST_CASE("outcome distributions are probability distributions") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> pick(0, 8);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + trial % 5;
    ModelParams m = ModelParams::Parse("0.35", trial % 2 ? "0.7" : "1", "0.4", k);
    StudentStrategy s(k);
    if (k > 1) {
      for (const ScoreSeq& h : AllSequences(k - 1)) {
        for (StudentType t : kTypes) s.Set(t, h, Rational(pick(rng), 8));
      }
    }
    OutcomeDistribution d = ComputeOutcomeDistribution(m, s);
    Rational total = 0;
    for (Cohort c : kCohorts) {
      CHECK(d.CohortTotal(c) == 1);
      for (const ScoreSeq& seq : AllSequences(k)) total += d.Joint(c, seq);
    }
    CHECK(total == 1);
    Beliefs b = ComputeBeliefs(m, AdmissionPolicy(ReportingRule::kReportAll, k), s);
    for (const ScoreSeq& seq : AllSequences(k)) {
      Rational mass = d.TotalMass(seq);
      CHECK(b.OnPath(seq.Index()) == (mass != 0));
      if (mass != 0) CHECK(*b.posterior[seq.Index()] == d.TypeMass(StudentType::kHigh, seq) / mass);
    }
  }
}

TEST_CASE("report all lowers category two admission relative to report max") {
  for (const char* alpha : {"0.7", "0.8"}) {
    for (int k : {2, 3}) {
      for (const char* p : {"0.3", "0.45", "0.55", "0.65"}) {
        ModelParams m = ModelParams::Parse(p, alpha, "0.5", k);
        if (m.p < ReportMaxThresholds(m).lower || m.p >= m.alpha) continue;
        OutcomeClass max = ComputeOutcomeClass(m, BuildReportMaxSeparating(m).policy);
        EnumerationOptions options;
        options.collect_profiles = true;
        options.witness_intervals = false;
        EnumerationResult r = EnumerateOutcomes(m, PolicyScope::kReportAll, options);
        bool strict = m.p < Rational(1, 2) || k > 3;
        for (const EquilibriumProfile& profile : r.profiles) {
          OutcomeClass all = ComputeOutcomeClass(m, profile.policy);
          for (int cohort : {2, 3}) {
            CAPTURE(m.ToString());
            CAPTURE(profile.policy.ToString());
            CHECK(*all.admit[cohort] <= *max.admit[cohort]);
            if (strict) CHECK(*all.admit[cohort] < *max.admit[cohort]);
          }
        }
      }
    }
  }
}

TEST_CASE("disparities and payoff gap shrink as tests get more accurate") {
  ModelParams m = ModelParams::Parse("0.3", "0.55", "0.5", 2);
  Rational prev_fnr = 2, prev_fpr = 2, prev_gap = 2;
  for (const Rational& alpha : Steps(11, 20, 20)) {
    m.alpha = alpha;
    FairnessReport max = ComputeFairnessReport(m, BuildReportMaxSeparating(m));
    Rational fnr = abs(*max.fnr_gap), fpr = abs(*max.fpr_gap), gap = PayoffGap(m);
    CHECK(fnr < prev_fnr);
    CHECK(fpr < prev_fpr);
    CHECK(gap < prev_gap);
    prev_fnr = fnr;
    prev_fpr = fpr;
    prev_gap = gap;
  }
  CHECK(prev_fnr == 0);
  CHECK(prev_gap == 0);
}

TEST_CASE("positive predictive value is higher under report all") {
  for (const Rational& alpha : Steps(11, 20, 20)) {
    for (const char* p : {"0.3", "0.45", "0.55"}) {
      for (int k : {2, 3, 4}) {
        ModelParams m = ModelParams::Parse(p, "0.8", "0.5", k);
        m.alpha = alpha;
        if (m.p < 1 - alpha || m.p > alpha) continue;
        if (alpha == 1) {
          CHECK(PpvFirstScore(m) == PpvReportMaxSeparating(m));
          CHECK(NpvFirstScore(m) == NpvReportMaxSeparating(m));
        } else {
          CHECK(PpvFirstScore(m) > PpvReportMaxSeparating(m));
          CHECK(NpvFirstScore(m) < NpvReportMaxSeparating(m));
        }
      }
    }
  }
}

TEST_CASE("college payoff ordering below the parity prior") {
  for (const char* alpha : {"0.65", "0.8", "0.9"}) {
    for (const char* p : {"0.25", "0.35", "0.45", "0.55"}) {
      ModelParams m = ModelParams::Parse(p, alpha, "0.5", 3);
      if (m.p >= PayoffParityThreshold(3, m.alpha) || m.p < 1 - m.alpha) continue;
      Rational sep = CollegePayoff(m, BuildReportMaxSeparating(m));
      Rational fs = CollegePayoff(m, BuildFirstScore(m));
      CHECK(fs > sep);
      for (int n = 2; n <= 3; ++n) {
        if (auto nfs = ConstructNonFirstScoreEquilibrium(m, n)) CHECK(CollegePayoff(m, *nfs) >= fs);
      }
    }
  }
}

TEST_CASE("every enumerated profile verifies and keeps the first-score skeleton at k three") {
  for (const char* p : {"0.3", "0.55"}) {
    ModelParams m = ModelParams::Parse(p, "0.75", "0.3", 3);
    EnumerationOptions options;
    options.collect_profiles = true;
    EnumerationResult r = EnumerateOutcomes(m, PolicyScope::kReportAll, options);
    CHECK(r.profiles_verified == static_cast<long>(r.profiles.size()));
    for (const EquilibriumProfile& profile : r.profiles) {
      CHECK(VerifyEquilibrium(m, profile).ok);
      CHECK(profile.policy.Accepts(ScoreSeq::Parse("A")));
      for (int len = 1; len <= 3; ++len) {
        CHECK_FALSE(profile.policy.Accepts(ScoreSeq::Run(Score::kB, len)));
      }
    }
  }
}

TEST_CASE("float thresholds agree with exact thresholds") {
  for (const Rational& alpha : Steps(11, 19, 20)) {
    for (const Rational& phi : Steps(0, 4, 4)) {
      for (int k : {2, 3}) {
        ModelParams m{Rational(1, 2), alpha, phi, k};
        ThresholdPair t = ReportMaxThresholds(m);
        double lo = ReportMaxLowerValue<double>(ToDouble(alpha), ToDouble(phi), k);
        double hi = ReportMaxUpperValue<double>(ToDouble(alpha), ToDouble(phi), k);
        CHECK(std::fabs(lo - ToDouble(t.lower)) < 1e-12);
        CHECK(std::fabs(hi - ToDouble(t.upper)) < 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace scoregame
