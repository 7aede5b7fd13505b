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

#ifndef SCOREGAME_MODEL_H_
#define SCOREGAME_MODEL_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scoregame/rational.h"

namespace scoregame {

enum class Score : std::uint8_t { kA = 0, kB = 1 };
enum class StudentType : std::uint8_t { kHigh = 0, kLow = 1 };

// Category 1 students sit the test once; Category 2 students may retake it
// adaptively up to k times.
enum class Category : std::uint8_t { kSingleTest = 0, kRetake = 1 };

constexpr std::array<StudentType, 2> kTypes = {StudentType::kHigh,
                                               StudentType::kLow};
constexpr std::array<Category, 2> kCategories = {Category::kSingleTest,
                                                 Category::kRetake};

struct Cohort {
  Category category;
  StudentType type;

  int Index() const {
    return 2 * static_cast<int>(category) + static_cast<int>(type);
  }
  friend bool operator==(const Cohort&, const Cohort&) = default;
};

constexpr std::array<Cohort, 4> kCohorts = {
    Cohort{Category::kSingleTest, StudentType::kHigh},
    Cohort{Category::kSingleTest, StudentType::kLow},
    Cohort{Category::kRetake, StudentType::kHigh},
    Cohort{Category::kRetake, StudentType::kLow}};

// "(1,H)" etc.
std::string CohortName(Cohort cohort);
char ScoreChar(Score s);
const char* TypeName(StudentType t);

// An ordered, non-empty history of scores. Sequences of length 1..L are packed
// into the dense index range [0, 2^(L+1) - 2), ordered by length and then
// lexicographically with A < B.
class ScoreSeq {
 public:
  static constexpr int kMaxLength = 20;

  ScoreSeq() = default;
  explicit ScoreSeq(Score s) : bits_(static_cast<std::uint32_t>(s)), length_(1) {}

  static ScoreSeq Parse(std::string_view text);
  static ScoreSeq FromIndex(int index);
  // A run of `count` copies of `s`.
  static ScoreSeq Run(Score s, int count);

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  Score at(int i) const {
    return static_cast<Score>((bits_ >> (length_ - 1 - i)) & 1u);
  }
  Score first() const { return at(0); }
  Score last() const { return at(length_ - 1); }

  ScoreSeq Append(Score s) const;
  ScoreSeq Prefix(int len) const;
  ScoreSeq Parent() const { return Prefix(length_ - 1); }
  bool StartsWith(const ScoreSeq& prefix) const;

  int Index() const { return (1 << length_) - 2 + static_cast<int>(bits_); }
  int CountA() const;
  bool ContainsA() const { return CountA() > 0; }
  std::string ToString() const;

  friend bool operator==(const ScoreSeq&, const ScoreSeq&) = default;
  friend std::strong_ordering operator<=>(const ScoreSeq& a, const ScoreSeq& b) {
    return a.Index() <=> b.Index();
  }

 private:
  std::uint32_t bits_ = 0;
  std::uint8_t length_ = 0;
};

// Number of sequences of length 1..max_length: 2^(max_length+1) - 2.
inline int SequenceCount(int max_length) { return (1 << (max_length + 1)) - 2; }
std::vector<ScoreSeq> AllSequences(int max_length);

struct ModelParams {
  static constexpr int kMaxTests = 16;

  Rational p;      // share of High types
  Rational alpha;  // per-test accuracy
  Rational phi;    // share of single-test (Category 1) students
  int k = 2;       // test limit for Category 2

  // Throws GameError(kInvalidParams) unless 0 < p < 1, 1/2 < alpha <= 1,
  // 0 <= phi <= 1 and 1 <= k <= kMaxTests.
  void Validate() const;
  static ModelParams Make(const Rational& p, const Rational& alpha,
                          const Rational& phi, int k);
  static ModelParams Parse(std::string_view p, std::string_view alpha,
                           std::string_view phi, int k);

  Rational CohortMass(Cohort cohort) const;
  Rational TypeMass(StudentType t) const { return t == StudentType::kHigh ? p : Complement(p); }
  // Probability that a single test by a student of type t yields s.
  Rational Emission(StudentType t, Score s) const;
  // Product of per-test emission probabilities along seq.
  Rational Likelihood(StudentType t, const ScoreSeq& seq) const;

  std::string ToString() const;
};

// Stop probabilities f(type, history) for Category 2 students, defined on
// histories shorter than k. Histories of length k stop implicitly.
class StudentStrategy {
 public:
  explicit StudentStrategy(int k);
  static StudentStrategy Constant(int k, const Rational& stop);

  int k() const { return k_; }
  // Throws GameError(kMalformed) for values outside [0, 1] or histories of
  // length >= k.
  void Set(StudentType t, const ScoreSeq& history, const Rational& stop);
  void SetBoth(const ScoreSeq& history, const Rational& stop);
  const std::optional<Rational>& Get(StudentType t, const ScoreSeq& history) const;
  bool Has(StudentType t, const ScoreSeq& history) const {
    return Get(t, history).has_value();
  }

 private:
  int k_;
  std::array<std::vector<std::optional<Rational>>, 2> stop_;
};

// Probability of each realized score sequence within each cohort. Category 1
// students only ever realize single scores.
class OutcomeDistribution {
 public:
  OutcomeDistribution(const ModelParams& params, int max_length);

  int max_length() const { return max_length_; }
  const Rational& CohortMass(Cohort c) const { return cohort_mass_[c.Index()]; }

  // Within-cohort probability.
  const Rational& Conditional(Cohort c, const ScoreSeq& seq) const {
    return conditional_[c.Index()][seq.Index()];
  }
  // Cohort-mass-weighted probability.
  Rational Joint(Cohort c, const ScoreSeq& seq) const {
    return Rational(cohort_mass_[c.Index()] * Conditional(c, seq));
  }
  Rational TypeMass(StudentType t, const ScoreSeq& seq) const;
  Rational TotalMass(const ScoreSeq& seq) const;
  Rational CohortTotal(Cohort c) const;

  void Add(Cohort c, const ScoreSeq& seq, const Rational& mass);

 private:
  int max_length_;
  std::array<Rational, 4> cohort_mass_;
  std::array<std::vector<Rational>, 4> conditional_;
};

// Chains per-test accuracy with the strategy's stop map. Throws
// GameError(kMissingStrategyEntry) if a history reached with positive
// probability has no stop entry.
OutcomeDistribution ComputeOutcomeDistribution(const ModelParams& params,
                                               const StudentStrategy& strategy);

// Best-score distribution when Category 2 students retake until they see an A
// (or run out of attempts). Support is the two length-1 sequences A and B.
OutcomeDistribution MaxScoreDistribution(const ModelParams& params);

// Collapses each realized sequence to its best score.
OutcomeDistribution ProjectToBestScore(const ModelParams& params,
                                       const OutcomeDistribution& dist);

// Stop iff the last score is A; equivalent to retake-until-A.
StudentStrategy RetakeUntilAStrategy(int k);

}  // namespace scoregame

#endif  // SCOREGAME_MODEL_H_
