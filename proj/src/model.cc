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

#include "scoregame/model.h"

#include <sstream>

#include "scoregame/error.h"

namespace scoregame {

std::string CohortName(Cohort cohort) {
  std::string name = "(";
  name += cohort.category == Category::kSingleTest ? '1' : '2';
  name += ',';
  name += cohort.type == StudentType::kHigh ? 'H' : 'L';
  name += ')';
  return name;
}

char ScoreChar(Score s) { return s == Score::kA ? 'A' : 'B'; }

const char* TypeName(StudentType t) {
  return t == StudentType::kHigh ? "High" : "Low";
}

// ---------------------------------------------------------------- ScoreSeq

ScoreSeq ScoreSeq::Parse(std::string_view text) {
  if (text.empty() || static_cast<int>(text.size()) > kMaxLength) {
    throw GameError(ErrorCode::kMalformed,
                    "bad score sequence '" + std::string(text) + "'");
  }
  ScoreSeq seq;
  for (char c : text) {
    if (c == 'A' || c == 'a') {
      seq = seq.Append(Score::kA);
    } else if (c == 'B' || c == 'b') {
      seq = seq.Append(Score::kB);
    } else {
      throw GameError(ErrorCode::kMalformed,
                      "bad score sequence '" + std::string(text) + "'");
    }
  }
  return seq;
}

ScoreSeq ScoreSeq::FromIndex(int index) {
  int length = 1;
  while (index >= (1 << (length + 1)) - 2) ++length;
  ScoreSeq seq;
  seq.length_ = static_cast<std::uint8_t>(length);
  seq.bits_ = static_cast<std::uint32_t>(index - ((1 << length) - 2));
  return seq;
}

ScoreSeq ScoreSeq::Run(Score s, int count) {
  ScoreSeq seq;
  for (int i = 0; i < count; ++i) seq = seq.Append(s);
  return seq;
}

ScoreSeq ScoreSeq::Append(Score s) const {
  ScoreSeq out;
  out.bits_ = (bits_ << 1) | static_cast<std::uint32_t>(s);
  out.length_ = static_cast<std::uint8_t>(length_ + 1);
  return out;
}

ScoreSeq ScoreSeq::Prefix(int len) const {
  ScoreSeq out;
  out.length_ = static_cast<std::uint8_t>(len);
  out.bits_ = len == 0 ? 0 : bits_ >> (length_ - len);
  return out;
}

bool ScoreSeq::StartsWith(const ScoreSeq& prefix) const {
  return prefix.length_ <= length_ && Prefix(prefix.length_) == prefix;
}

int ScoreSeq::CountA() const { return length_ - __builtin_popcount(bits_); }

std::string ScoreSeq::ToString() const {
  std::string out;
  for (int i = 0; i < length_; ++i) out += ScoreChar(at(i));
  return out;
}

std::vector<ScoreSeq> AllSequences(int max_length) {
  std::vector<ScoreSeq> out;
  out.reserve(SequenceCount(max_length));
  for (int i = 0; i < SequenceCount(max_length); ++i) {
    out.push_back(ScoreSeq::FromIndex(i));
  }
  return out;
}

// ------------------------------------------------------------- ModelParams

void ModelParams::Validate() const {
  auto fail = [](const std::string& msg) {
    throw GameError(ErrorCode::kInvalidParams, msg);
  };
  if (!(p > 0 && p < 1)) fail("p must lie in (0, 1), got " + ToFractionString(p));
  if (!(alpha > Rational(1, 2) && alpha <= 1)) {
    fail("alpha must lie in (1/2, 1], got " + ToFractionString(alpha));
  }
  if (!(phi >= 0 && phi <= 1)) fail("phi must lie in [0, 1], got " + ToFractionString(phi));
  if (k < 1 || k > kMaxTests) {
    fail("k must lie in [1, " + std::to_string(kMaxTests) + "], got " + std::to_string(k));
  }
}

ModelParams ModelParams::Make(const Rational& p, const Rational& alpha,
                              const Rational& phi, int k) {
  ModelParams params{p, alpha, phi, k};
  params.p.canonicalize();
  params.alpha.canonicalize();
  params.phi.canonicalize();
  params.Validate();
  return params;
}

ModelParams ModelParams::Parse(std::string_view p, std::string_view alpha,
                               std::string_view phi, int k) {
  return Make(ParseRational(p), ParseRational(alpha), ParseRational(phi), k);
}

Rational ModelParams::CohortMass(Cohort cohort) const {
  Rational cat = cohort.category == Category::kSingleTest ? phi : Complement(phi);
  return Rational(cat * TypeMass(cohort.type));
}

Rational ModelParams::Emission(StudentType t, Score s) const {
  bool correct = (t == StudentType::kHigh) == (s == Score::kA);
  return correct ? alpha : Complement(alpha);
}

Rational ModelParams::Likelihood(StudentType t, const ScoreSeq& seq) const {
  int a = seq.CountA();
  int b = seq.length() - a;
  return Rational(Pow(Emission(t, Score::kA), a) * Pow(Emission(t, Score::kB), b));
}

std::string ModelParams::ToString() const {
  std::ostringstream os;
  os << "alpha=" << FormatDecimal(alpha) << " p=" << FormatDecimal(p)
     << " phi=" << FormatDecimal(phi) << " k=" << k;
  return os.str();
}

// --------------------------------------------------------- StudentStrategy

StudentStrategy::StudentStrategy(int k) : k_(k) {
  if (k < 1 || k > ModelParams::kMaxTests) {
    throw GameError(ErrorCode::kMalformed, "strategy k out of range");
  }
  // Histories of length 1..k-1.
  int histories = k >= 2 ? SequenceCount(k - 1) : 0;
  for (auto& v : stop_) v.assign(histories, std::nullopt);
}

StudentStrategy StudentStrategy::Constant(int k, const Rational& stop) {
  StudentStrategy s(k);
  for (int i = 0; i < static_cast<int>(s.stop_[0].size()); ++i) {
    s.SetBoth(ScoreSeq::FromIndex(i), stop);
  }
  return s;
}

void StudentStrategy::Set(StudentType t, const ScoreSeq& history,
                          const Rational& value) {
  Rational stop = value;
  stop.canonicalize();
  if (history.empty() || history.length() >= k_) {
    throw GameError(ErrorCode::kMalformed,
                    "no stop decision at history '" + history.ToString() + "'");
  }
  if (stop < 0 || stop > 1) {
    throw GameError(ErrorCode::kMalformed, "stop probability outside [0,1]");
  }
  stop_[static_cast<int>(t)][history.Index()] = stop;
}

void StudentStrategy::SetBoth(const ScoreSeq& history, const Rational& stop) {
  Set(StudentType::kHigh, history, stop);
  Set(StudentType::kLow, history, stop);
}

const std::optional<Rational>& StudentStrategy::Get(StudentType t,
                                                    const ScoreSeq& history) const {
  static const std::optional<Rational> kNone;
  if (history.empty() || history.length() >= k_) return kNone;
  return stop_[static_cast<int>(t)][history.Index()];
}

StudentStrategy RetakeUntilAStrategy(int k) {
  StudentStrategy s(k);
  if (k < 2) return s;
  for (const ScoreSeq& h : AllSequences(k - 1)) {
    s.SetBoth(h, h.last() == Score::kA ? Rational(1) : Rational(0));
  }
  return s;
}

// ----------------------------------------------------- OutcomeDistribution

OutcomeDistribution::OutcomeDistribution(const ModelParams& params, int max_length)
    : max_length_(max_length) {
  for (Cohort c : kCohorts) {
    cohort_mass_[c.Index()] = params.CohortMass(c);
    conditional_[c.Index()].assign(SequenceCount(max_length), Rational(0));
  }
}

Rational OutcomeDistribution::TypeMass(StudentType t, const ScoreSeq& seq) const {
  Rational total = 0;
  for (Category cat : kCategories) total += Joint(Cohort{cat, t}, seq);
  return total;
}

Rational OutcomeDistribution::TotalMass(const ScoreSeq& seq) const {
  return Rational(TypeMass(StudentType::kHigh, seq) + TypeMass(StudentType::kLow, seq));
}

Rational OutcomeDistribution::CohortTotal(Cohort c) const {
  Rational total = 0;
  for (const Rational& m : conditional_[c.Index()]) total += m;
  return total;
}

void OutcomeDistribution::Add(Cohort c, const ScoreSeq& seq, const Rational& mass) {
  conditional_[c.Index()][seq.Index()] += mass;
}

namespace {

void ChainRetaker(const ModelParams& params, const StudentStrategy& strategy,
                  StudentType t, const ScoreSeq& history, const Rational& reach,
                  OutcomeDistribution& dist) {
  Cohort cohort{Category::kRetake, t};
  if (history.length() == params.k) {
    dist.Add(cohort, history, reach);
    return;
  }
  const std::optional<Rational>& stop = strategy.Get(t, history);
  if (!stop) {
    throw GameError(ErrorCode::kMissingStrategyEntry,
                    std::string("no stop probability for ") + TypeName(t) +
                        " at reachable history '" + history.ToString() + "'");
  }
  dist.Add(cohort, history, Rational(reach * *stop));
  Rational go_on = reach * (1 - *stop);
  if (go_on == 0) return;
  for (Score s : {Score::kA, Score::kB}) {
    Rational next = go_on * params.Emission(t, s);
    if (next != 0) ChainRetaker(params, strategy, t, history.Append(s), next, dist);
  }
}

}  // namespace

OutcomeDistribution ComputeOutcomeDistribution(const ModelParams& params,
                                               const StudentStrategy& strategy) {
  params.Validate();
  if (strategy.k() != params.k) {
    throw GameError(ErrorCode::kMalformed, "strategy and params disagree on k");
  }
  OutcomeDistribution dist(params, params.k);
  for (StudentType t : kTypes) {
    for (Score s : {Score::kA, Score::kB}) {
      ScoreSeq first(s);
      Rational e = params.Emission(t, s);
      dist.Add(Cohort{Category::kSingleTest, t}, first, e);
      if (e != 0) ChainRetaker(params, strategy, t, first, e, dist);
    }
  }
  return dist;
}

OutcomeDistribution MaxScoreDistribution(const ModelParams& params) {
  params.Validate();
  OutcomeDistribution dist(params, 1);
  const ScoreSeq a(Score::kA), b(Score::kB);
  for (StudentType t : kTypes) {
    Rational miss = params.Emission(t, Score::kB);
    dist.Add(Cohort{Category::kSingleTest, t}, a, params.Emission(t, Score::kA));
    dist.Add(Cohort{Category::kSingleTest, t}, b, miss);
    Rational all_miss = Pow(miss, params.k);
    dist.Add(Cohort{Category::kRetake, t}, a, Rational(1 - all_miss));
    dist.Add(Cohort{Category::kRetake, t}, b, all_miss);
  }
  return dist;
}

OutcomeDistribution ProjectToBestScore(const ModelParams& params,
                                       const OutcomeDistribution& dist) {
  OutcomeDistribution out(params, 1);
  for (const ScoreSeq& seq : AllSequences(dist.max_length())) {
    ScoreSeq best(seq.ContainsA() ? Score::kA : Score::kB);
    for (Cohort c : kCohorts) out.Add(c, best, dist.Conditional(c, seq));
  }
  return out;
}

}  // namespace scoregame
