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

#include "cli/report_json.h"

namespace scoregame {

Json Num(const Rational& x) { return ToDouble(x); }

Json Num(const std::optional<Rational>& x) { return x ? Num(*x) : Json(nullptr); }

Json Num(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json ToJson(const ModelParams& params) {
  return Json{{"alpha", Num(params.alpha)},
              {"p", Num(params.p)},
              {"phi", Num(params.phi)},
              {"k", params.k}};
}

Json ToJson(const FairnessReport& r) {
  return Json{{"fnr_cat1", Num(r.fnr[0])},       {"fnr_cat2", Num(r.fnr[1])},
              {"fpr_cat1", Num(r.fpr[0])},       {"fpr_cat2", Num(r.fpr[1])},
              {"fnr_gap", Num(r.fnr_gap)},       {"fpr_gap", Num(r.fpr_gap)},
              {"ppv", Num(r.ppv)},               {"npv", Num(r.npv)},
              {"college_payoff", Num(r.college_payoff)}};
}

Json ToJson(const EquilibriumProfile& profile) {
  Json accepted = Json::array();
  for (const ScoreSeq& s : profile.policy.AcceptedObservations()) accepted.push_back(s.ToString());
  Json strategy = Json::array();
  if (profile.strategy.k() >= 2) {
    for (const ScoreSeq& h : AllSequences(profile.strategy.k() - 1)) {
      for (StudentType t : kTypes) {
        const std::optional<Rational>& f = profile.strategy.Get(t, h);
        if (!f) continue;
        strategy.push_back(Json{{"type", TypeName(t)}, {"history", h.ToString()}, {"stop", Num(*f)}});
      }
    }
  }
  Json beliefs = Json::object();
  for (const ScoreSeq& obs : Observations(profile.policy.rule(), profile.policy.k())) {
    const std::optional<Rational>& b = profile.beliefs.posterior[obs.Index()];
    beliefs[obs.ToString()] = b ? Num(*b) : Json("off_path");
  }
  Json intervals = Json::array();
  for (const StrategyInterval& iv : profile.free_intervals) {
    intervals.push_back(Json{{"type", TypeName(iv.type)},
                             {"history", iv.history.ToString()},
                             {"continue_min", Num(iv.low)},
                             {"continue_max", Num(iv.high)}});
  }
  return Json{{"rule", RuleName(profile.policy.rule())},
              {"label", profile.label.ToString()},
              {"accept", accepted},
              {"strategy", strategy},
              {"beliefs", beliefs},
              {"free_intervals", intervals}};
}

Json ToJson(const OutcomeClass& outcome) {
  Json out = Json::object();
  for (Cohort c : kCohorts) out[CohortName(c)] = Num(outcome.admit[c.Index()]);
  return out;
}

Json ToJson(const Region& region) {
  Json out = Json::array();
  for (const Interval& iv : region.intervals()) out.push_back(Json::array({Num(iv.lo), Num(iv.hi)}));
  return out;
}

Json ToJson(const EmpiricalReport& r) {
  Json cohorts = Json::object();
  for (Cohort c : kCohorts) {
    const CohortCounts& cc = r.cohorts[c.Index()];
    Json seqs = Json::object();
    for (size_t i = 0; i < cc.sequences.size(); ++i) {
      if (cc.sequences[i] > 0) seqs[ScoreSeq::FromIndex(static_cast<int>(i)).ToString()] = cc.sequences[i];
    }
    cohorts[CohortName(c)] = Json{{"students", cc.students}, {"admitted", cc.admitted}, {"sequences", seqs}};
  }
  return Json{{"fnr_cat1", Num(r.fnr[0])}, {"fnr_cat2", Num(r.fnr[1])},
              {"fpr_cat1", Num(r.fpr[0])}, {"fpr_cat2", Num(r.fpr[1])},
              {"fnr_gap", Num(r.fnr_gap)}, {"fpr_gap", Num(r.fpr_gap)},
              {"ppv", Num(r.ppv)},         {"npv", Num(r.npv)},
              {"college_payoff", r.college_payoff}, {"cohorts", cohorts}};
}

std::string Cell(const Rational& x) { return FormatDecimal(x); }

std::string Cell(const std::optional<Rational>& x) { return x ? Cell(*x) : std::string(); }

}  // namespace scoregame
