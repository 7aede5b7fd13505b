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

#include "scoregame/lp.h"

#include <utility>

#include "scoregame/error.h"

namespace scoregame {

void LinearProgram::AddConstraint(std::vector<Rational> coeffs, Relation rel,
                                  Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars_) {
    throw GameError(ErrorCode::kMalformed, "constraint width mismatch");
  }
  for (Rational& c : coeffs) c.canonicalize();
  rhs.canonicalize();
  rows_.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::vector<Rational>& row(int i) { return t_[i]; }
  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return static_cast<int>(obj_.size()) - 1; }
  std::vector<int>& basis() { return basis_; }
  const Rational& objective_value() const { return obj_.back(); }

  // Objective row for maximizing c.x under the current basis.
  void Price(const std::vector<Rational>& c) {
    int n = static_cast<int>(c.size());
    obj_.assign(n + 1, Rational(0));
    for (int j = 0; j <= n; ++j) {
      Rational v = j < n ? Rational(-c[j]) : Rational(0);
      for (int i = 0; i < rows(); ++i) {
        const Rational& cb = c[basis_[i]];
        if (cb != 0 && t_[i][j] != 0) v += cb * t_[i][j];
      }
      obj_[j] = v;
    }
  }

  void Pivot(int r, int c) {
    Rational inv = 1 / t_[r][c];
    for (Rational& v : t_[r]) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      Rational f = target[c];
      if (f == 0) return;
      for (size_t j = 0; j < target.size(); ++j) {
        if (t_[r][j] != 0) target[j] -= f * t_[r][j];
      }
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  // Bland's rule; allowed masks out columns that may not enter.
  LpStatus Optimize(const std::vector<bool>& allowed) {
    const int n = cols();
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        if (allowed[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][n] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      Pivot(leave, enter);
    }
  }

  void DropRow(int i) {
    t_.erase(t_.begin() + i);
    basis_.erase(basis_.begin() + i);
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution LinearProgram::Maximize(const std::vector<Rational>& objective) const {
  if (static_cast<int>(objective.size()) != num_vars_) {
    throw GameError(ErrorCode::kMalformed, "objective width mismatch");
  }
  const int m = num_constraints();
  int slacks = 0, artificials = 0;
  for (const Row& r : rows_) {
    bool flip = r.b < 0;
    Relation rel = r.rel;
    if (flip && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    if (rel != Relation::kEqual) ++slacks;
    if (rel != Relation::kLessEqual) ++artificials;
  }
  const int n = num_vars_;
  const int first_art = n + slacks;
  const int total = first_art + artificials;

  Tableau tab(m, total);
  int next_slack = n, next_art = first_art;
  for (int i = 0; i < m; ++i) {
    const Row& r = rows_[i];
    bool flip = r.b < 0;
    Relation rel = r.rel;
    if (flip && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    std::vector<Rational>& row = tab.row(i);
    for (int j = 0; j < n; ++j) row[j] = flip ? Rational(-r.a[j]) : r.a[j];
    row[total] = flip ? Rational(-r.b) : r.b;
    if (rel == Relation::kLessEqual) {
      row[next_slack] = 1;
      tab.basis()[i] = next_slack++;
    } else {
      if (rel == Relation::kGreaterEqual) row[next_slack++] = -1;
      row[next_art] = 1;
      tab.basis()[i] = next_art++;
    }
  }

  std::vector<bool> allowed(total, true);
  if (artificials > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (int j = first_art; j < total; ++j) phase1[j] = -1;
    tab.Price(phase1);
    tab.Optimize(allowed);
    if (tab.objective_value() < 0) return LpSolution{LpStatus::kInfeasible, 0, {}};
    // Drive zero-valued artificials out of the basis.
    for (int i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis()[i] < first_art) continue;
      int col = -1;
      for (int j = 0; j < first_art; ++j) {
        if (tab.row(i)[j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.Pivot(i, col);
      } else {
        tab.DropRow(i);
      }
    }
    for (int j = first_art; j < total; ++j) allowed[j] = false;
  }

  std::vector<Rational> phase2(total, Rational(0));
  for (int j = 0; j < n; ++j) {
    phase2[j] = objective[j];
    phase2[j].canonicalize();
  }
  tab.Price(phase2);
  LpStatus status = tab.Optimize(allowed);
  LpSolution out;
  out.status = status;
  if (status != LpStatus::kOptimal) return out;
  out.objective = tab.objective_value();
  out.x.assign(n, Rational(0));
  for (int i = 0; i < tab.rows(); ++i) {
    int b = tab.basis()[i];
    if (b < n) out.x[b] = tab.row(i)[total];
  }
  return out;
}

LpSolution LinearProgram::Minimize(const std::vector<Rational>& objective) const {
  std::vector<Rational> neg(objective.size());
  for (size_t j = 0; j < objective.size(); ++j) neg[j] = -objective[j];
  LpSolution s = Maximize(neg);
  if (s.status == LpStatus::kOptimal) s.objective = -s.objective;
  return s;
}

LpSolution LinearProgram::FindFeasible() const {
  return Maximize(std::vector<Rational>(num_vars_, Rational(0)));
}

}  // namespace scoregame
