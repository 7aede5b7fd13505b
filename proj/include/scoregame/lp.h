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

#ifndef SCOREGAME_LP_H_
#define SCOREGAME_LP_H_

#include <vector>

#include "scoregame/rational.h"

namespace scoregame {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
};

// Exact dense two-phase simplex over non-negative variables. Bland's rule
// keeps it cycle-free; the programs built by the enumerator have a few dozen
// rows at most.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  int num_constraints() const { return static_cast<int>(rows_.size()); }

  void AddConstraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);

  LpSolution Maximize(const std::vector<Rational>& objective) const;
  LpSolution Minimize(const std::vector<Rational>& objective) const;
  LpSolution FindFeasible() const;

 private:
  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };

  int num_vars_;
  std::vector<Row> rows_;
};

}  // namespace scoregame

#endif  // SCOREGAME_LP_H_
