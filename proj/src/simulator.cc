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

#include "scoregame/simulator.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "scoregame/error.h"

namespace scoregame {

namespace {

double Uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

struct Plan {
  int k;
  double phi, p, alpha;
  // Stop probability per type and history; negative when unspecified.
  std::array<std::vector<double>, 2> stop;
  std::vector<bool> accept;  // by sequence index
};

Plan MakePlan(const SimConfig& config) {
  const ModelParams& params = config.params;
  Plan plan{params.k, ToDouble(params.phi), ToDouble(params.p), ToDouble(params.alpha), {}, {}};
  for (int t = 0; t < 2; ++t) plan.stop[t].assign(SequenceCount(params.k), -1.0);
  if (params.k >= 2) {
    for (const ScoreSeq& h : AllSequences(params.k - 1)) {
      for (StudentType t : kTypes) {
        const std::optional<Rational>& f = config.profile.strategy.Get(t, h);
        if (f) plan.stop[static_cast<int>(t)][h.Index()] = ToDouble(*f);
      }
    }
  }
  for (const ScoreSeq& s : AllSequences(params.k)) {
    plan.accept.push_back(config.profile.policy.Accepts(s));
  }
  return plan;
}

void RunBlock(const Plan& plan, std::uint64_t seed, std::uint64_t block, std::uint64_t count,
              std::array<CohortCounts, 4>& out) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 gen(seq);
  for (std::uint64_t i = 0; i < count; ++i) {
    Category cat = Uniform(gen) < plan.phi ? Category::kSingleTest : Category::kRetake;
    StudentType type = Uniform(gen) < plan.p ? StudentType::kHigh : StudentType::kLow;
    const int t = static_cast<int>(type);
    auto draw = [&] {
      bool correct = Uniform(gen) < plan.alpha;
      return (type == StudentType::kHigh) == correct ? Score::kA : Score::kB;
    };
    ScoreSeq h(draw());
    if (cat == Category::kRetake) {
      while (h.length() < plan.k) {
        double f = plan.stop[t][h.Index()];
        if (f < 0) {
          throw GameError(ErrorCode::kMissingStrategyEntry,
                          "no stop probability at history '" + h.ToString() + "'");
        }
        if (Uniform(gen) < f) break;
        h = h.Append(draw());
      }
    }
    CohortCounts& c = out[Cohort{cat, type}.Index()];
    ++c.students;
    ++c.sequences[h.Index()];
    if (plan.accept[h.Index()]) ++c.admitted;
  }
}

std::optional<double> Ratio(double num, double den) {
  if (den == 0) return std::nullopt;
  return num / den;
}

}  // namespace

EmpiricalReport Simulate(const SimConfig& config) {
  if (config.n == 0) throw GameError(ErrorCode::kEmptyPopulation, "n must be at least 1");
  config.params.Validate();
  if (config.profile.policy.k() != config.params.k ||
      config.profile.strategy.k() != config.params.k) {
    throw GameError(ErrorCode::kMalformed, "profile and params disagree on k");
  }
  const Plan plan = MakePlan(config);
  const std::uint64_t blocks = (config.n + kSimBlock - 1) / kSimBlock;
  auto fresh = [&] {
    std::array<CohortCounts, 4> c;
    for (CohortCounts& cc : c) cc.sequences.assign(SequenceCount(plan.k), 0);
    return c;
  };
  std::vector<std::array<CohortCounts, 4>> partial(blocks);
  auto run = [&](std::uint64_t b) {
    partial[b] = fresh();
    std::uint64_t count = std::min(kSimBlock, config.n - b * kSimBlock);
    RunBlock(plan, config.seed, b, count, partial[b]);
  };
  int workers = config.workers > 0 ? config.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::clamp<std::uint64_t>(workers, 1, blocks));
  if (workers == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::uint64_t b = next++; b < blocks && !failed; b = next++) run(b);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  EmpiricalReport r;
  r.cohorts = fresh();
  for (const auto& part : partial) {
    for (int c = 0; c < 4; ++c) {
      r.cohorts[c].students += part[c].students;
      r.cohorts[c].admitted += part[c].admitted;
      for (size_t s = 0; s < part[c].sequences.size(); ++s) {
        r.cohorts[c].sequences[s] += part[c].sequences[s];
      }
    }
  }
  double admitted_high = 0, admitted_low = 0, rejected_high = 0, rejected_low = 0;
  for (Cohort c : kCohorts) {
    const CohortCounts& cc = r.cohorts[c.Index()];
    const double admitted = static_cast<double>(cc.admitted);
    const double rejected = static_cast<double>(cc.students - cc.admitted);
    const int cat = static_cast<int>(c.category);
    if (c.type == StudentType::kHigh) {
      admitted_high += admitted;
      rejected_high += rejected;
      r.fnr[cat] = Ratio(rejected, static_cast<double>(cc.students));
    } else {
      admitted_low += admitted;
      rejected_low += rejected;
      r.fpr[cat] = Ratio(admitted, static_cast<double>(cc.students));
    }
  }
  if (r.fnr[0] && r.fnr[1]) r.fnr_gap = *r.fnr[0] - *r.fnr[1];
  if (r.fpr[0] && r.fpr[1]) r.fpr_gap = *r.fpr[0] - *r.fpr[1];
  r.ppv = Ratio(admitted_high, admitted_high + admitted_low);
  r.npv = Ratio(rejected_low, rejected_high + rejected_low);
  r.college_payoff = (admitted_high - admitted_low) / static_cast<double>(config.n);
  return r;
}

}  // namespace scoregame
