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

#include "scoregame/search.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

#include "scoregame/analytic.h"
#include "scoregame/error.h"
#include "scoregame/lp.h"
#include "scoregame/posterior.h"

namespace scoregame {

const char* StopChoiceName(StopChoice c) {
  switch (c) {
    case StopChoice::kStop:
      return "stop";
    case StopChoice::kContinue:
      return "continue";
    case StopChoice::kEither:
      return "either";
  }
  return "either";
}

// ---------------------------------------------------------- best response

BestResponseSet::BestResponseSet(int k) : k_(k) {
  for (int t = 0; t < 2; ++t) {
    choice_[t].assign(SequenceCount(k), StopChoice::kStop);
    value_[t].assign(SequenceCount(k), Rational(0));
  }
}

StopChoice BestResponseSet::Choice(StudentType t, const ScoreSeq& h) const {
  return choice_[static_cast<int>(t)][h.Index()];
}

const Rational& BestResponseSet::Value(StudentType t, const ScoreSeq& h) const {
  return value_[static_cast<int>(t)][h.Index()];
}

void BestResponseSet::Set(StudentType t, const ScoreSeq& h, StopChoice choice,
                          Rational value) {
  choice_[static_cast<int>(t)][h.Index()] = choice;
  value_[static_cast<int>(t)][h.Index()] = std::move(value);
}

Rational BestResponseSet::RootValue(const ModelParams& params, StudentType t) const {
  Rational v = 0;
  for (Score s : {Score::kA, Score::kB}) v += params.Emission(t, s) * Value(t, ScoreSeq(s));
  return v;
}

bool BestResponseSet::Allows(StudentType t, const ScoreSeq& h, const Rational& stop) const {
  switch (Choice(t, h)) {
    case StopChoice::kStop:
      return stop == 1;
    case StopChoice::kContinue:
      return stop == 0;
    case StopChoice::kEither:
      return stop >= 0 && stop <= 1;
  }
  return false;
}

BestResponseSet BestResponse(const ModelParams& params, const AdmissionPolicy& policy) {
  if (policy.k() != params.k) {
    throw GameError(ErrorCode::kMalformed, "policy and params disagree on k");
  }
  BestResponseSet br(params.k);
  std::vector<ScoreSeq> seqs = AllSequences(params.k);
  for (auto it = seqs.rbegin(); it != seqs.rend(); ++it) {
    const ScoreSeq& h = *it;
    Rational stop_value = policy.Accepts(h) ? 1 : 0;
    for (StudentType t : kTypes) {
      if (h.length() == params.k) {
        br.Set(t, h, StopChoice::kStop, stop_value);
        continue;
      }
      Rational go_on = params.Emission(t, Score::kA) * br.Value(t, h.Append(Score::kA)) +
                       params.Emission(t, Score::kB) * br.Value(t, h.Append(Score::kB));
      int c = cmp(stop_value, go_on);
      if (c > 0) {
        br.Set(t, h, StopChoice::kStop, stop_value);
      } else if (c < 0) {
        br.Set(t, h, StopChoice::kContinue, go_on);
      } else {
        br.Set(t, h, StopChoice::kEither, stop_value);
      }
    }
  }
  return br;
}

// ----------------------------------------------------------- verification

namespace {

std::string Where(StudentType t, const ScoreSeq& h) {
  return std::string(TypeName(t)) + " at " + h.ToString();
}

}  // namespace

Verdict VerifyEquilibrium(const ModelParams& params, const EquilibriumProfile& profile,
                          const VerifyOptions& options) {
  params.Validate();
  const AdmissionPolicy& policy = profile.policy;
  if (policy.k() != params.k || profile.strategy.k() != params.k) {
    throw GameError(ErrorCode::kMalformed, "profile and params disagree on k");
  }
  const int obs_count = policy.observation_count();
  if (static_cast<int>(profile.beliefs.posterior.size()) != obs_count ||
      static_cast<int>(profile.beliefs.off_path_assignment.size()) != obs_count) {
    throw GameError(ErrorCode::kMalformed, "beliefs do not cover every observation");
  }
  OutcomeDistribution dist(params, 1);
  try {
    dist = ObservedDistribution(params, policy.rule(), profile.strategy);
  } catch (const GameError& e) {
    if (e.code() != ErrorCode::kMissingStrategyEntry) throw;
    throw GameError(ErrorCode::kMalformed, e.what());
  }
  const bool exact = options.mode == VerifyMode::kExact;
  const double eps = options.epsilon;
  Verdict verdict;
  auto fail = [&](std::string msg) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(msg));
  };

  BestResponseSet br = BestResponse(params, policy);
  if (params.k >= 2) {
    for (const ScoreSeq& h : AllSequences(params.k - 1)) {
      for (StudentType t : kTypes) {
        const std::optional<Rational>& f = profile.strategy.Get(t, h);
        if (!f) {
          verdict.notes.push_back("no stop probability for unreached " + Where(t, h));
          continue;
        }
        StopChoice c = br.Choice(t, h);
        bool ok = exact ? br.Allows(t, h, *f)
                        : (c == StopChoice::kEither ||
                           std::abs(ToDouble(*f) - (c == StopChoice::kStop ? 1.0 : 0.0)) <= eps);
        if (!ok) {
          fail("stop probability " + FormatDecimal(*f) + " for " + Where(t, h) +
               " is not a best response (" + StopChoiceName(c) + ")");
        }
      }
    }
  }

  for (const ScoreSeq& obs : Observations(policy.rule(), params.k)) {
    const int i = obs.Index();
    const bool accept = policy.AcceptsObservation(i);
    std::optional<Rational> post = Posterior(dist, obs);
    const std::optional<Rational>& stored = profile.beliefs.posterior[i];
    if (stored.has_value() != post.has_value() || (stored && *stored != *post)) {
      fail("stored belief at " + obs.ToString() + " does not match the strategy");
    }
    if (!post) {
      const std::optional<Rational>& assigned = profile.beliefs.off_path_assignment[i];
      if (assigned && (accept ? *assigned < Rational(1, 2) : *assigned > Rational(1, 2))) {
        fail("off-path belief at " + obs.ToString() + " does not support the policy");
      }
      verdict.notes.push_back(std::string(accept ? "accept" : "reject") + " off-path " +
                              obs.ToString());
      continue;
    }
    CollegeChoice rule = exact ? CollegeRule(*post) : CollegeRule(ToDouble(*post), eps);
    if ((accept && rule == CollegeChoice::kReject) || (!accept && rule == CollegeChoice::kAccept)) {
      fail(std::string(accept ? "accepts " : "rejects ") + obs.ToString() + " at posterior " +
           FormatDecimal(*post));
    }
  }
  return verdict;
}

// ---------------------------------------------------------- outcome class

bool operator<(const OutcomeClass& a, const OutcomeClass& b) { return a.admit < b.admit; }

std::string OutcomeClass::ToString() const {
  std::string out;
  for (Cohort c : kCohorts) {
    if (!out.empty()) out += ' ';
    out += CohortName(c) + '=';
    const std::optional<Rational>& v = admit[c.Index()];
    out += v ? FormatDecimal(*v) : "-";
  }
  return out;
}

OutcomeClass ComputeOutcomeClass(const ModelParams& params, const AdmissionPolicy& policy) {
  BestResponseSet br = BestResponse(params, policy);
  OutcomeClass out;
  for (Cohort c : kCohorts) {
    if (params.CohortMass(c) == 0) continue;
    if (c.category == Category::kRetake) {
      out.admit[c.Index()] = br.RootValue(params, c.type);
    } else {
      Rational v = 0;
      for (Score s : {Score::kA, Score::kB}) {
        if (policy.Accepts(ScoreSeq(s))) v += params.Emission(c.type, s);
      }
      out.admit[c.Index()] = v;
    }
  }
  return out;
}

namespace {

bool Matches(const OutcomeClass& outcome, const std::array<Rational, 4>& target) {
  for (int i = 0; i < 4; ++i) {
    if (outcome.admit[i] && *outcome.admit[i] != target[i]) return false;
  }
  return true;
}

}  // namespace

EquilibriumKind ClassifyOutcome(const ModelParams& params, ReportingRule rule,
                                const OutcomeClass& outcome) {
  bool all_zero = true, all_one = true;
  for (const auto& v : outcome.admit) {
    if (!v) continue;
    all_zero = all_zero && *v == 0;
    all_one = all_one && *v == 1;
  }
  if (all_zero) return EquilibriumKind::kRejectAll;
  if (all_one) return EquilibriumKind::kAcceptAll;
  const Rational a = params.alpha, b = 1 - params.alpha;
  if (rule == ReportingRule::kReportMax) {
    std::array<Rational, 4> sep = {a, b, Rational(1 - Pow(b, params.k)),
                                   Rational(1 - Pow(a, params.k))};
    return Matches(outcome, sep) ? EquilibriumKind::kSeparating : EquilibriumKind::kOther;
  }
  return Matches(outcome, {a, b, a, b}) ? EquilibriumKind::kFirstScore
                                        : EquilibriumKind::kNonFirstScore;
}

// ------------------------------------------------------- support programs

namespace {

// c + sum coef_i v_i over the program's free continuation masses.
struct Affine {
  Rational c;
  std::map<int, Rational> terms;

  bool constant() const { return terms.empty(); }
  void AddScaled(const Affine& other, const Rational& w) {
    if (w == 0) return;
    c += w * other.c;
    for (const auto& [v, coef] : other.terms) {
      Rational& slot = terms[v];
      slot += w * coef;
      if (slot == 0) terms.erase(v);
    }
  }
  Rational Eval(const std::vector<Rational>& x) const {
    Rational out = c;
    for (const auto& [v, coef] : terms) out += coef * x[v];
    return out;
  }
};

// Sequence-form feasibility program: is there a best-responding strategy
// under which every on-path observation's posterior agrees with the policy?
// y(t, h) is the unconditional probability that a Category 2 student of type
// t reaches h and keeps testing (emission factors excluded). Optionally
// restricted to histories starting with a given first score; under Report All
// the two first-score subtrees do not interact.
class SupportProgram {
 public:
  SupportProgram(const ModelParams& params, const AdmissionPolicy& policy,
                 const BestResponseSet& br, std::optional<Score> subtree)
      : params_(params), policy_(policy), br_(br), subtree_(subtree) {
    const int k = params.k;
    for (int t = 0; t < 2; ++t) y_[t].resize(SequenceCount(k));
    for (const ScoreSeq& h : AllSequences(k)) {
      if (!InScope(h)) continue;
      for (StudentType t : kTypes) {
        Affine x = Reach(t, h);
        Affine y;
        if (h.length() < k) {
          switch (br.Choice(t, h)) {
            case StopChoice::kStop:
              break;
            case StopChoice::kContinue:
              y = x;
              break;
            case StopChoice::kEither: {
              int v = static_cast<int>(owner_.size());
              owner_.emplace_back(t, h);
              y.terms[v] = 1;
              Affine cap = y;
              cap.AddScaled(x, -1);
              rows_.push_back({cap, Relation::kLessEqual});
              break;
            }
          }
        }
        y_[static_cast<int>(t)][h.Index()] = y;
      }
    }
    BuildObservationRows();
  }

  int num_vars() const { return static_cast<int>(owner_.size()); }

  std::optional<std::vector<Rational>> Solve() const {
    if (constant_violation_) return std::nullopt;
    if (num_vars() == 0) return std::vector<Rational>();
    LpSolution s = ToLp().FindFeasible();
    if (s.status != LpStatus::kOptimal) return std::nullopt;
    return s.x;
  }

  // Writes stop probabilities for every in-scope history.
  void FillStrategy(const std::vector<Rational>& x, StudentStrategy& strategy) const {
    if (params_.k < 2) return;
    for (const ScoreSeq& h : AllSequences(params_.k - 1)) {
      if (!InScope(h)) continue;
      for (StudentType t : kTypes) {
        Rational reach = Reach(t, h).Eval(x);
        Rational stop;
        switch (br_.Choice(t, h)) {
          case StopChoice::kStop:
            stop = 1;
            break;
          case StopChoice::kContinue:
            stop = 0;
            break;
          case StopChoice::kEither:
            stop = reach > 0 ? Rational(1 - y_[static_cast<int>(t)][h.Index()].Eval(x) / reach)
                             : Rational(1);
            break;
        }
        strategy.Set(t, h, stop);
      }
    }
  }

  std::vector<StrategyInterval> Intervals() const {
    std::vector<StrategyInterval> out;
    LinearProgram lp = ToLp();
    for (int v = 0; v < num_vars(); ++v) {
      std::vector<Rational> obj(num_vars(), Rational(0));
      obj[v] = 1;
      LpSolution lo = lp.Minimize(obj);
      LpSolution hi = lp.Maximize(obj);
      if (lo.status != LpStatus::kOptimal || hi.status != LpStatus::kOptimal) continue;
      out.push_back({owner_[v].first, owner_[v].second, lo.objective, hi.objective});
    }
    return out;
  }

 private:
  bool InScope(const ScoreSeq& h) const { return !subtree_ || h.first() == *subtree_; }

  Affine Reach(StudentType t, const ScoreSeq& h) const {
    if (h.length() == 1) return Affine{1, {}};
    return y_[static_cast<int>(t)][h.Parent().Index()];
  }

  void BuildObservationRows() {
    const ReportingRule rule = policy_.rule();
    std::vector<Affine> diff(policy_.observation_count());
    std::vector<bool> touched(policy_.observation_count(), false);
    const Rational phi = params_.phi, phi_bar = 1 - params_.phi;
    for (const ScoreSeq& q : AllSequences(params_.k)) {
      if (!InScope(q)) continue;
      const int o = Observe(rule, q).Index();
      touched[o] = true;
      for (StudentType t : kTypes) {
        Rational w = params_.TypeMass(t) * params_.Likelihood(t, q);
        if (t == StudentType::kLow) w = -w;
        if (w == 0) continue;
        if (q.length() == 1) diff[o].c += phi * w;
        Affine stop_mass = Reach(t, q);
        if (q.length() < params_.k) stop_mass.AddScaled(y_[static_cast<int>(t)][q.Index()], -1);
        diff[o].AddScaled(stop_mass, Rational(phi_bar * w));
      }
    }
    for (int o = 0; o < policy_.observation_count(); ++o) {
      if (!touched[o]) continue;
      // H mass minus L mass: non-negative when accepted, non-positive when
      // rejected. Off-path observations have zero of both.
      Relation rel = policy_.AcceptsObservation(o) ? Relation::kGreaterEqual
                                                   : Relation::kLessEqual;
      if (diff[o].constant()) {
        int s = sgn(diff[o].c);
        if ((rel == Relation::kGreaterEqual && s < 0) || (rel == Relation::kLessEqual && s > 0)) {
          constant_violation_ = true;
        }
        continue;
      }
      rows_.push_back({diff[o], rel});
    }
  }

  LinearProgram ToLp() const {
    LinearProgram lp(num_vars());
    for (const auto& [expr, rel] : rows_) {
      std::vector<Rational> coeffs(num_vars(), Rational(0));
      for (const auto& [v, coef] : expr.terms) coeffs[v] = coef;
      lp.AddConstraint(std::move(coeffs), rel, Rational(-expr.c));
    }
    return lp;
  }

  const ModelParams& params_;
  const AdmissionPolicy& policy_;
  const BestResponseSet& br_;
  std::optional<Score> subtree_;
  std::array<std::vector<Affine>, 2> y_;
  std::vector<std::pair<StudentType, ScoreSeq>> owner_;
  std::vector<std::pair<Affine, Relation>> rows_;
  bool constant_violation_ = false;
};

template <typename Fn>
void ParallelFor(int n, int workers, Fn&& fn) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

EquilibriumProfile MakeProfile(const ModelParams& params, const AdmissionPolicy& policy,
                               StudentStrategy strategy) {
  Beliefs beliefs = ComputeBeliefs(params, policy, strategy);
  return EquilibriumProfile{policy, std::move(strategy), std::move(beliefs), {}, {}};
}

AdmissionPolicy TrailingRunPolicy(int k, int n) {
  ScoreSeq target(Score::kB);
  for (int i = 1; i < n; ++i) target = target.Append(Score::kA);
  return AdmissionPolicy::FromPredicate(ReportingRule::kReportAll, k, [&](const ScoreSeq& s) {
    return s.first() == Score::kA || s == target;
  });
}

EquilibriumLabel LabelFor(const ModelParams& params, ReportingRule rule,
                          const OutcomeClass& outcome) {
  EquilibriumLabel label{ClassifyOutcome(params, rule, outcome), 0};
  if (label.kind == EquilibriumKind::kNonFirstScore) {
    for (int n = 2; n <= params.k; ++n) {
      if (ComputeOutcomeClass(params, TrailingRunPolicy(params.k, n)) == outcome) {
        label.n = n;
        break;
      }
    }
  }
  return label;
}

struct Found {
  EquilibriumProfile profile;
  OutcomeClass outcome;
};

class Collector {
 public:
  Collector(const ModelParams& params, const EnumerationOptions& options,
            EnumerationResult& result)
      : params_(params), options_(options), result_(result) {}

  void Add(Found found) {
    ++result_.profiles_verified;
    ReportingRule rule = found.profile.policy.rule();
    auto key = std::make_pair(static_cast<int>(rule), found.outcome);
    auto it = index_.find(key);
    if (it == index_.end()) {
      index_.emplace(key, static_cast<int>(result_.classes.size()));
      EquilibriumLabel label = LabelFor(params_, rule, found.outcome);
      found.profile.label = label;
      result_.classes.push_back(OutcomeEntry{rule, found.outcome, label, found.profile, 1});
    } else {
      ++result_.classes[it->second].supporting_policies;
      found.profile.label = result_.classes[it->second].label;
    }
    if (options_.collect_profiles) result_.profiles.push_back(std::move(found.profile));
  }

 private:
  const ModelParams& params_;
  const EnumerationOptions& options_;
  EnumerationResult& result_;
  std::map<std::pair<int, OutcomeClass>, int> index_;
};

std::optional<Found> TrySupport(const ModelParams& params, const AdmissionPolicy& policy) {
  BestResponseSet br = BestResponse(params, policy);
  SupportProgram program(params, policy, br, std::nullopt);
  std::optional<std::vector<Rational>> x = program.Solve();
  if (!x) return std::nullopt;
  StudentStrategy strategy(params.k);
  program.FillStrategy(*x, strategy);
  EquilibriumProfile profile = MakeProfile(params, policy, std::move(strategy));
  if (!VerifyEquilibrium(params, profile).ok) return std::nullopt;
  return Found{std::move(profile), ComputeOutcomeClass(params, policy)};
}

// Report All, all 2^(2^(k+1)-2) policies, solved one first-score subtree at a
// time and recombined.
void EnumerateReportAll(const ModelParams& params, const EnumerationOptions& options,
                        EnumerationResult& result, Collector& collector) {
  const int k = params.k;
  struct Half {
    std::vector<ScoreSeq> obs;
    std::vector<std::optional<StudentStrategy>> witness;  // by mask
  };
  std::array<Half, 2> halves;
  for (Score first : {Score::kA, Score::kB}) {
    Half& half = halves[static_cast<int>(first)];
    for (const ScoreSeq& s : AllSequences(k)) {
      if (s.first() == first) half.obs.push_back(s);
    }
    const int masks = 1 << half.obs.size();
    half.witness.assign(masks, std::nullopt);
    ParallelFor(masks, options.workers, [&](int mask) {
      AdmissionPolicy policy(ReportingRule::kReportAll, k);
      for (size_t i = 0; i < half.obs.size(); ++i) {
        if ((mask >> i) & 1) policy.Set(half.obs[i], true);
      }
      BestResponseSet br = BestResponse(params, policy);
      SupportProgram program(params, policy, br, first);
      std::optional<std::vector<Rational>> x = program.Solve();
      if (!x) return;
      StudentStrategy strategy(k);
      program.FillStrategy(*x, strategy);
      half.witness[mask] = std::move(strategy);
    });
  }

  std::vector<std::pair<int, int>> combos;
  const Half& a = halves[0];
  const Half& b = halves[1];
  for (int ma = 0; ma < static_cast<int>(a.witness.size()); ++ma) {
    if (!a.witness[ma]) continue;
    for (int mb = 0; mb < static_cast<int>(b.witness.size()); ++mb) {
      if (b.witness[mb]) combos.emplace_back(ma, mb);
    }
  }
  result.policies_examined = static_cast<long>(a.witness.size()) * b.witness.size();

  std::vector<std::optional<Found>> found(combos.size());
  ParallelFor(static_cast<int>(combos.size()), options.workers, [&](int i) {
    auto [ma, mb] = combos[i];
    AdmissionPolicy policy(ReportingRule::kReportAll, k);
    StudentStrategy strategy(k);
    for (int side = 0; side < 2; ++side) {
      const Half& half = halves[side];
      int mask = side == 0 ? ma : mb;
      for (size_t j = 0; j < half.obs.size(); ++j) {
        if ((mask >> j) & 1) policy.Set(half.obs[j], true);
      }
      if (k < 2) continue;
      const StudentStrategy& w = *half.witness[mask];
      for (const ScoreSeq& h : AllSequences(k - 1)) {
        if (static_cast<int>(h.first()) != side) continue;
        for (StudentType t : kTypes) strategy.Set(t, h, *w.Get(t, h));
      }
    }
    EquilibriumProfile profile = MakeProfile(params, policy, std::move(strategy));
    if (!VerifyEquilibrium(params, profile).ok) return;
    found[i] = Found{std::move(profile), ComputeOutcomeClass(params, policy)};
  });
  for (auto& f : found) {
    if (f) collector.Add(std::move(*f));
  }
}

void EnumerateList(const ModelParams& params, const std::vector<AdmissionPolicy>& policies,
                   const EnumerationOptions& options, EnumerationResult& result,
                   Collector& collector) {
  result.policies_examined += static_cast<long>(policies.size());
  std::vector<std::optional<Found>> found(policies.size());
  ParallelFor(static_cast<int>(policies.size()), options.workers,
              [&](int i) { found[i] = TrySupport(params, policies[i]); });
  for (auto& f : found) {
    if (f) collector.Add(std::move(*f));
  }
}

}  // namespace

std::optional<EquilibriumProfile> SupportPolicy(const ModelParams& params,
                                                const AdmissionPolicy& policy,
                                                bool intervals) {
  params.Validate();
  std::optional<Found> found = TrySupport(params, policy);
  if (!found) return std::nullopt;
  found->profile.label = LabelFor(params, policy.rule(), found->outcome);
  if (intervals) {
    BestResponseSet br = BestResponse(params, policy);
    found->profile.free_intervals = SupportProgram(params, policy, br, std::nullopt).Intervals();
  }
  return std::move(found->profile);
}

const char* ScopeName(PolicyScope scope) {
  switch (scope) {
    case PolicyScope::kReportAll:
      return "report-all";
    case PolicyScope::kReportMax:
      return "report-max";
    case PolicyScope::kFamilies:
      return "families";
  }
  return "report-all";
}

PolicyScope ParseScope(const std::string& text) {
  for (PolicyScope s : {PolicyScope::kReportAll, PolicyScope::kReportMax, PolicyScope::kFamilies}) {
    if (text == ScopeName(s)) return s;
  }
  throw GameError(ErrorCode::kMalformed,
                  "unknown scope '" + text + "' (report-all, report-max, families)");
}

std::vector<AdmissionPolicy> FamilyPolicies(int k) {
  std::vector<AdmissionPolicy> out;
  const ReportingRule all = ReportingRule::kReportAll;
  // Accept iff the sequence opens with m A's; m = 1 is the first-score rule.
  for (int m = 1; m <= k; ++m) {
    out.push_back(AdmissionPolicy::FromPredicate(all, k, [m](const ScoreSeq& s) {
      return s.length() >= m && s.Prefix(m) == ScoreSeq::Run(Score::kA, m);
    }));
  }
  for (int n = 2; n <= k; ++n) out.push_back(TrailingRunPolicy(k, n));
  out.push_back(AdmissionPolicy(all, k));
  out.push_back(AdmissionPolicy::FromPredicate(all, k, [](const ScoreSeq&) { return true; }));
  return out;
}

bool EnumerationResult::HasKind(EquilibriumKind kind) const {
  return std::any_of(classes.begin(), classes.end(),
                     [&](const OutcomeEntry& e) { return e.label.kind == kind; });
}

EnumerationResult EnumerateOutcomes(const ModelParams& params, PolicyScope scope,
                                    const EnumerationOptions& options) {
  params.Validate();
  if (scope == PolicyScope::kReportAll && params.k > kMaxExhaustiveTests) {
    throw GameError(ErrorCode::kScopeTooLarge,
                    "exhaustive report-all enumeration is limited to k <= 3; use --scope "
                    "families for larger k");
  }
  if (params.k > kMaxLpTests) {
    throw GameError(ErrorCode::kScopeTooLarge,
                    "enumeration is limited to k <= " + std::to_string(kMaxLpTests));
  }
  EnumerationResult result;
  result.scope = scope;
  result.boundary = IsCriticalPrior(params);
  Collector collector(params, options, result);
  switch (scope) {
    case PolicyScope::kReportAll:
      EnumerateReportAll(params, options, result, collector);
      break;
    case PolicyScope::kReportMax: {
      std::vector<AdmissionPolicy> policies;
      for (std::uint64_t mask = 0; mask < 4; ++mask) {
        policies.push_back(AdmissionPolicy::FromMask(ReportingRule::kReportMax, params.k, mask));
      }
      EnumerateList(params, policies, options, result, collector);
      break;
    }
    case PolicyScope::kFamilies:
      EnumerateList(params, FamilyPolicies(params.k), options, result, collector);
      break;
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const OutcomeEntry& a, const OutcomeEntry& b) {
              return std::tie(a.rule, a.label.kind, a.outcome) <
                     std::tie(b.rule, b.label.kind, b.outcome);
            });
  if (options.witness_intervals) {
    for (OutcomeEntry& e : result.classes) {
      BestResponseSet br = BestResponse(params, e.witness.policy);
      e.witness.free_intervals =
          SupportProgram(params, e.witness.policy, br, std::nullopt).Intervals();
    }
  }
  return result;
}

}  // namespace scoregame
