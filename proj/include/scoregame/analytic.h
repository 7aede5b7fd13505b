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

#ifndef SCOREGAME_ANALYTIC_H_
#define SCOREGAME_ANALYTIC_H_

#include <optional>
#include <string>
#include <vector>

#include "scoregame/model.h"
#include "scoregame/posterior.h"
#include "scoregame/profile.h"
#include "scoregame/rational.h"

namespace scoregame {

struct Interval {
  Rational lo;
  Rational hi;

  bool Contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool IsEndpoint(const Rational& x) const { return x == lo || x == hi; }
};

// Sorted, disjoint closed intervals of priors inside [0, 1].
class Region {
 public:
  // Clips to [0, 1]; empty intervals are dropped, touching ones merged.
  void Add(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool Contains(const Rational& x) const;
  bool IsEndpoint(const Rational& x) const;
  std::string ToString() const;

 private:
  std::vector<Interval> intervals_;
};

// Report Max separating thresholds: lower p̂_k and upper p̂'_k.
template <typename T>
T ReportMaxLowerValue(const T& alpha, const T& phi, int k) {
  const T one(1);
  T a_bar = T(one - alpha), phi_bar = T(one - phi);
  T ak = IntPow(alpha, k), bk = IntPow(a_bar, k);
  return T((phi * a_bar + phi_bar * (one - ak)) / (phi + phi_bar * (T(2) - ak - bk)));
}

template <typename T>
T ReportMaxUpperValue(const T& alpha, const T& phi, int k) {
  const T one(1);
  T a_bar = T(one - alpha), phi_bar = T(one - phi);
  T ak = IntPow(alpha, k), bk = IntPow(a_bar, k);
  return T((phi * alpha + phi_bar * ak) / (phi + phi_bar * (ak + bk)));
}

struct ThresholdPair {
  Rational lower;
  Rational upper;
};

ThresholdPair ReportMaxThresholds(const ModelParams& params);
// The two-test lower threshold in its own printed form,
// (1 + α φ̄) / (1/ᾱ + 2 α φ̄). Requires α < 1.
Rational ReportMaxLowerTwoTest(const Rational& alpha, const Rational& phi);

// Accept iff the best score is A; Category 2 retakes until A. Returns nullopt
// outside [p̂_k, p̂'_k].
std::optional<EquilibriumProfile> ReportMaxSeparating(const ModelParams& params);
EquilibriumProfile BuildReportMaxSeparating(const ModelParams& params);

// Two-test reject-all equilibria under Report Max. x_high and x_low are the
// probabilities of retaking after a first B.
class RejectAllRegion {
 public:
  RejectAllRegion(const ModelParams& params, Rational threshold);

  // p̂̂ = min{1/2, (αᾱφ̄ + ᾱ) / (αᾱφ̄ + 1)}.
  const Rational& threshold() const { return threshold_; }
  // x_high ranges over [0, XHighMax()].
  Rational XHighMax() const;
  // Admissible x_low for a given x_high, clipped to [0, 1].
  Interval XLow(const Rational& x_high) const;
  bool Admits(const Rational& x_high, const Rational& x_low) const;

 private:
  ModelParams params_;
  Rational threshold_;
  Rational c_;  // α ᾱ φ̄
};

Rational RejectAllThreshold(const Rational& alpha, const Rational& phi);
// Throws GameError(kUnsupportedK) unless k == 2.
std::optional<RejectAllRegion> ReportMaxRejectAll(const ModelParams& params);
EquilibriumProfile BuildReportMaxRejectAll(const ModelParams& params,
                                           const Rational& x_high,
                                           const Rational& x_low);

// p*_k = ᾱ^(k-2) / (α^(k-2) + ᾱ^(k-2)) and p**_k = (α - α^k) / (1 - α^k - ᾱ^k).
// Both throw GameError(kUnsupportedK) for k < 2. At α = 1, p**_k is taken
// as its limit (k-1)/k.
Rational NonFirstScoreThreshold(int k, const Rational& alpha);
Rational PayoffParityThreshold(int k, const Rational& alpha);

struct ReportAllRegions {
  Interval first_score;  // [ᾱ, α]
  bool first_score_exists = false;
  Region non_first_score;  // [p*_(k+2), ᾱ] ∪ [p*_k, α]
  bool non_first_score_exists = false;
};

// Throws GameError(kUnsupportedK) for k < 2.
ReportAllRegions ComputeReportAllRegions(const ModelParams& params);

// Accept iff the first score is A, everybody tests once. Throws
// GameError(kNoEquilibrium) outside [ᾱ, α].
EquilibriumProfile ConstructFirstScoreEquilibrium(const ModelParams& params);
EquilibriumProfile BuildFirstScore(const ModelParams& params);

// Accept every A-first sequence and B A^(n-1). Throws GameError(kBadIndex)
// unless 2 <= n <= k; nullopt outside [p*_n, p*_(n-1)] ∩ [ᾱ, α].
std::optional<EquilibriumProfile> ConstructNonFirstScoreEquilibrium(
    const ModelParams& params, int n);
EquilibriumProfile BuildNonFirstScore(const ModelParams& params, int n);

// Every prior at which some region above changes; used for boundary flags.
std::vector<Rational> CriticalPriors(const ModelParams& params);
bool IsCriticalPrior(const ModelParams& params);

}  // namespace scoregame

#endif  // SCOREGAME_ANALYTIC_H_
