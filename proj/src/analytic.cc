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

#include "scoregame/analytic.h"

#include <algorithm>

#include "scoregame/error.h"

namespace scoregame {

void Region::Add(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = std::max(lo_in, Rational(0));
  Rational hi = std::min(hi_in, Rational(1));
  if (lo > hi) return;
  std::vector<Interval> merged;
  Interval cur{lo, hi};
  bool placed = false;
  for (const Interval& iv : intervals_) {
    if (iv.hi < cur.lo) {
      merged.push_back(iv);
    } else if (cur.hi < iv.lo) {
      if (!placed) merged.push_back(cur);
      placed = true;
      merged.push_back(iv);
    } else {
      cur.lo = std::min(cur.lo, iv.lo);
      cur.hi = std::max(cur.hi, iv.hi);
    }
  }
  if (!placed) merged.push_back(cur);
  intervals_ = std::move(merged);
}

bool Region::Contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.Contains(x); });
}

bool Region::IsEndpoint(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.IsEndpoint(x); });
}

std::string Region::ToString() const {
  if (intervals_.empty()) return "{}";
  std::string out;
  for (const Interval& iv : intervals_) {
    if (!out.empty()) out += " U ";
    out += "[" + FormatDecimal(iv.lo) + ", " + FormatDecimal(iv.hi) + "]";
  }
  return out;
}

// ------------------------------------------------------------- Report Max

ThresholdPair ReportMaxThresholds(const ModelParams& params) {
  params.Validate();
  return {ReportMaxLowerValue(params.alpha, params.phi, params.k),
          ReportMaxUpperValue(params.alpha, params.phi, params.k)};
}

Rational ReportMaxLowerTwoTest(const Rational& alpha, const Rational& phi) {
  if (alpha >= 1) throw GameError(ErrorCode::kInvalidParams, "two-test form needs alpha < 1");
  Rational t = alpha * (1 - phi);
  return Rational((1 + t) / (1 / (1 - alpha) + 2 * t));
}

EquilibriumProfile BuildReportMaxSeparating(const ModelParams& params) {
  AdmissionPolicy policy(ReportingRule::kReportMax, params.k);
  policy.Set(ScoreSeq(Score::kA), true);
  StudentStrategy strategy = RetakeUntilAStrategy(params.k);
  Beliefs beliefs = ComputeBeliefs(params, policy, strategy);
  return EquilibriumProfile{policy, strategy, beliefs,
                            EquilibriumLabel{EquilibriumKind::kSeparating, 0}, {}};
}

std::optional<EquilibriumProfile> ReportMaxSeparating(const ModelParams& params) {
  ThresholdPair t = ReportMaxThresholds(params);
  if (params.p < t.lower || params.p > t.upper) return std::nullopt;
  return BuildReportMaxSeparating(params);
}

Rational RejectAllThreshold(const Rational& alpha, const Rational& phi) {
  Rational c = alpha * (1 - alpha) * (1 - phi);
  return std::min(Rational(1, 2), Rational((c + 1 - alpha) / (c + 1)));
}

RejectAllRegion::RejectAllRegion(const ModelParams& params, Rational threshold)
    : params_(params),
      threshold_(std::move(threshold)),
      c_(params.alpha * Complement(params.alpha) * Complement(params.phi)) {}

Rational RejectAllRegion::XHighMax() const {
  if (c_ == 0) return 1;
  const Rational& p = params_.p;
  Rational bound = (c_ * (1 - p) + (1 - params_.alpha) - p) / (c_ * p);
  return std::clamp(bound, Rational(0), Rational(1));
}

Interval RejectAllRegion::XLow(const Rational& x_high) const {
  if (c_ == 0) return {0, 1};
  const Rational& p = params_.p;
  const Rational& a = params_.alpha;
  Rational shift = c_ * p * x_high;
  Rational den = c_ * (1 - p);
  Rational lo = (p - (1 - a) + shift) / den;
  Rational hi = (a - p + shift) / den;
  return {std::max(lo, Rational(0)), std::min(hi, Rational(1))};
}

bool RejectAllRegion::Admits(const Rational& x_high, const Rational& x_low) const {
  if (x_high < 0 || x_high > XHighMax()) return false;
  return XLow(x_high).Contains(x_low);
}

std::optional<RejectAllRegion> ReportMaxRejectAll(const ModelParams& params) {
  params.Validate();
  if (params.k != 2) {
    throw GameError(ErrorCode::kUnsupportedK,
                    "reject-all analysis is only available for k = 2");
  }
  Rational threshold = RejectAllThreshold(params.alpha, params.phi);
  if (params.p > threshold) return std::nullopt;
  return RejectAllRegion(params, threshold);
}

EquilibriumProfile BuildReportMaxRejectAll(const ModelParams& params,
                                           const Rational& x_high,
                                           const Rational& x_low) {
  if (params.k != 2) {
    throw GameError(ErrorCode::kUnsupportedK,
                    "reject-all analysis is only available for k = 2");
  }
  AdmissionPolicy policy(ReportingRule::kReportMax, 2);
  StudentStrategy strategy(2);
  const ScoreSeq a(Score::kA), b(Score::kB);
  strategy.SetBoth(a, 1);
  strategy.Set(StudentType::kHigh, b, Rational(1 - x_high));
  strategy.Set(StudentType::kLow, b, Rational(1 - x_low));
  Beliefs beliefs = ComputeBeliefs(params, policy, strategy);
  EquilibriumProfile profile{policy, strategy, beliefs,
                             EquilibriumLabel{EquilibriumKind::kRejectAll, 0}, {}};
  RejectAllRegion region(params, RejectAllThreshold(params.alpha, params.phi));
  profile.free_intervals.push_back({StudentType::kHigh, b, 0, region.XHighMax()});
  Interval low = region.XLow(x_high);
  profile.free_intervals.push_back({StudentType::kLow, b, low.lo, low.hi});
  return profile;
}

// -------------------------------------------------------------- Report All

namespace {

// p*_k for any k >= 1; p*_1 = α (the k = 1 formula has a removable pole at
// α = 1).
Rational PStar(int k, const Rational& alpha) {
  Rational a_bar = 1 - alpha;
  if (k == 1) return alpha;
  Rational num = Pow(a_bar, k - 2);
  return Rational(num / (Pow(alpha, k - 2) + num));
}

void RequireK(int k) {
  if (k < 2) {
    throw GameError(ErrorCode::kUnsupportedK, "threshold needs k >= 2, got " + std::to_string(k));
  }
}

}  // namespace

Rational NonFirstScoreThreshold(int k, const Rational& alpha) {
  RequireK(k);
  return PStar(k, alpha);
}

Rational PayoffParityThreshold(int k, const Rational& alpha) {
  RequireK(k);
  if (alpha == 1) return Rational(k - 1, k);
  Rational ak = Pow(alpha, k);
  return Rational((alpha - ak) / (1 - ak - Pow(1 - alpha, k)));
}

ReportAllRegions ComputeReportAllRegions(const ModelParams& params) {
  params.Validate();
  RequireK(params.k);
  ReportAllRegions out;
  Rational a_bar = 1 - params.alpha;
  out.first_score = {a_bar, params.alpha};
  out.first_score_exists = out.first_score.Contains(params.p);
  out.non_first_score.Add(PStar(params.k + 2, params.alpha), a_bar);
  out.non_first_score.Add(PStar(params.k, params.alpha), params.alpha);
  out.non_first_score_exists = out.non_first_score.Contains(params.p);
  return out;
}

EquilibriumProfile BuildFirstScore(const ModelParams& params) {
  AdmissionPolicy policy = AdmissionPolicy::FromPredicate(
      ReportingRule::kReportAll, params.k,
      [](const ScoreSeq& s) { return s.first() == Score::kA; });
  StudentStrategy strategy = StudentStrategy::Constant(params.k, 1);
  Beliefs beliefs = ComputeBeliefs(params, policy, strategy);
  return EquilibriumProfile{policy, strategy, beliefs,
                            EquilibriumLabel{EquilibriumKind::kFirstScore, 0}, {}};
}

EquilibriumProfile ConstructFirstScoreEquilibrium(const ModelParams& params) {
  params.Validate();
  if (params.p < 1 - params.alpha || params.p > params.alpha) {
    throw GameError(ErrorCode::kNoEquilibrium,
                    "first-score equilibrium needs 1-alpha <= p <= alpha");
  }
  return BuildFirstScore(params);
}

EquilibriumProfile BuildNonFirstScore(const ModelParams& params, int n) {
  if (n < 2 || n > params.k) {
    throw GameError(ErrorCode::kBadIndex, "n must lie in [2, k], got " + std::to_string(n));
  }
  ScoreSeq target = ScoreSeq(Score::kB);
  for (int i = 1; i < n; ++i) target = target.Append(Score::kA);
  AdmissionPolicy policy = AdmissionPolicy::FromPredicate(
      ReportingRule::kReportAll, params.k,
      [&](const ScoreSeq& s) { return s.first() == Score::kA || s == target; });
  StudentStrategy strategy(params.k);
  if (params.k >= 2) {
    for (const ScoreSeq& h : AllSequences(params.k - 1)) {
      bool climbing = h.length() < n && target.StartsWith(h);
      strategy.SetBoth(h, climbing ? 0 : 1);
    }
  }
  Beliefs beliefs = ComputeBeliefs(params, policy, strategy);
  return EquilibriumProfile{policy, strategy, beliefs,
                            EquilibriumLabel{EquilibriumKind::kNonFirstScore, n}, {}};
}

std::optional<EquilibriumProfile> ConstructNonFirstScoreEquilibrium(
    const ModelParams& params, int n) {
  params.Validate();
  if (n < 2 || n > params.k) {
    throw GameError(ErrorCode::kBadIndex, "n must lie in [2, k], got " + std::to_string(n));
  }
  Rational lo = std::max(PStar(n, params.alpha), Rational(1 - params.alpha));
  Rational hi = std::min(PStar(n - 1, params.alpha), params.alpha);
  if (params.p < lo || params.p > hi) return std::nullopt;
  return BuildNonFirstScore(params, n);
}

std::vector<Rational> CriticalPriors(const ModelParams& params) {
  std::vector<Rational> out = {Rational(1) - params.alpha, params.alpha, Rational(1, 2)};
  ThresholdPair t{ReportMaxLowerValue(params.alpha, params.phi, params.k),
                  ReportMaxUpperValue(params.alpha, params.phi, params.k)};
  out.push_back(t.lower);
  out.push_back(t.upper);
  if (params.k == 2) out.push_back(RejectAllThreshold(params.alpha, params.phi));
  if (params.k >= 2) {
    for (int j = 2; j <= params.k + 2; ++j) out.push_back(PStar(j, params.alpha));
    out.push_back(PayoffParityThreshold(params.k, params.alpha));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsCriticalPrior(const ModelParams& params) {
  std::vector<Rational> c = CriticalPriors(params);
  return std::binary_search(c.begin(), c.end(), params.p);
}

}  // namespace scoregame
