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

#include "cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli/report_json.h"
#include "scoregame/error.h"

namespace scoregame {

namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
    case ErrorCode::kMalformed:
    case ErrorCode::kEmptyPopulation:
      return 2;
    case ErrorCode::kIo:
      return 4;
    default:
      return 3;
  }
}

struct PointFlags {
  std::string alpha, p, phi;
  int k = 2;
};

void AddPointFlags(CLI::App* cmd, PointFlags& f, bool need_p = true) {
  cmd->add_option("--alpha", f.alpha, "per-test accuracy, in (1/2, 1]")->required();
  auto* p = cmd->add_option("--p", f.p, "share of High types, in (0, 1)");
  if (need_p) p->required();
  cmd->add_option("--phi", f.phi, "share of single-test students, in [0, 1]")->required();
  cmd->add_option("--k", f.k, "test limit for retakers")->default_val(2);
}

ModelParams ParsePoint(const PointFlags& f) {
  return ModelParams::Parse(f.p.empty() ? "1/2" : f.p, f.alpha, f.phi, f.k);
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw GameError(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw GameError(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

std::string Yes(bool b) { return b ? "yes" : "no"; }

std::string Fmt(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_number_float()) return FormatDecimal(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string ReportLine(const Json& r) {
  std::ostringstream os;
  os << "fnr " << Fmt(r["fnr_cat1"]) << "/" << Fmt(r["fnr_cat2"]) << "  fpr "
     << Fmt(r["fpr_cat1"]) << "/" << Fmt(r["fpr_cat2"]) << "  gaps " << Fmt(r["fnr_gap"])
     << "/" << Fmt(r["fpr_gap"]) << "  ppv " << Fmt(r["ppv"]) << "  npv " << Fmt(r["npv"])
     << "  payoff " << Fmt(r["college_payoff"]);
  return os.str();
}

template <typename Fn>
void ParallelFor(int n, Fn&& fn) {
  int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(1, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (int i = next++; i < n && !failed; i = next++) fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Classes reachable for one reporting rule at one point, in canonical order.
std::vector<OutcomeEntry> ClassesFor(const ModelParams& params, ReportingRule rule) {
  EnumerationOptions options;
  options.witness_intervals = false;
  options.workers = 1;
  if (params.k <= kMaxLpTests) {
    PolicyScope scope = rule == ReportingRule::kReportMax ? PolicyScope::kReportMax
                        : params.k <= kMaxExhaustiveTests ? PolicyScope::kReportAll
                                                          : PolicyScope::kFamilies;
    return EnumerateOutcomes(params, scope, options).classes;
  }
  std::vector<OutcomeEntry> out;
  std::optional<EquilibriumProfile> profile;
  if (rule == ReportingRule::kReportMax) {
    profile = ReportMaxSeparating(params);
  } else if (params.p >= 1 - params.alpha && params.p <= params.alpha) {
    profile = BuildFirstScore(params);
  }
  if (profile) {
    OutcomeClass outcome = ComputeOutcomeClass(params, profile->policy);
    out.push_back(OutcomeEntry{rule, outcome, profile->label, *profile, 1});
  }
  return out;
}

// ----------------------------------------------------------------- analyze

Json Analyze(const ModelParams& params) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "analyze";
  j["params"] = ToJson(params);

  Json th;
  ThresholdPair max = ReportMaxThresholds(params);
  th["p_hat_k"] = Num(max.lower);
  th["p_hat_prime_k"] = Num(max.upper);
  if (params.k == 2) th["p_hat_hat"] = Num(RejectAllThreshold(params.alpha, params.phi));
  if (params.k >= 2) {
    th["p_star_k"] = Num(NonFirstScoreThreshold(params.k, params.alpha));
    th["p_star_k_plus_2"] = Num(NonFirstScoreThreshold(params.k + 2, params.alpha));
    th["p_double_star_k"] = Num(PayoffParityThreshold(params.k, params.alpha));
  }
  j["thresholds"] = th;

  Json regions;
  regions["report_max_separating"] = params.p >= max.lower && params.p <= max.upper;
  if (params.k == 2) regions["report_max_reject_all"] = ReportMaxRejectAll(params).has_value();
  if (params.k >= 2) {
    ReportAllRegions ra = ComputeReportAllRegions(params);
    regions["first_score"] = ra.first_score_exists;
    regions["non_first_score"] = ra.non_first_score_exists;
    regions["non_first_score_region"] = ToJson(ra.non_first_score);
  }
  regions["boundary"] = IsCriticalPrior(params);
  j["regions"] = regions;

  Json eq = Json::array();
  auto add = [&](const EquilibriumProfile& profile) {
    Json e = ToJson(profile);
    e["verified"] = VerifyEquilibrium(params, profile).ok;
    e["report"] = ToJson(ComputeFairnessReport(params, profile));
    eq.push_back(e);
  };
  std::optional<EquilibriumProfile> sep = ReportMaxSeparating(params);
  if (sep) add(*sep);
  if (params.k == 2) {
    if (std::optional<RejectAllRegion> ra = ReportMaxRejectAll(params)) {
      add(BuildReportMaxRejectAll(params, 0, ra->XLow(0).lo));
    }
  }
  if (params.p >= 1 - params.alpha && params.p <= params.alpha) {
    add(ConstructFirstScoreEquilibrium(params));
  }
  for (int n = 2; n <= params.k; ++n) {
    if (auto nfs = ConstructNonFirstScoreEquilibrium(params, n)) add(*nfs);
  }
  j["equilibria"] = eq;

  Json cmp;
  if (params.k >= 2) cmp["payoff_gap"] = Num(PayoffGap(params));
  PolicyComparison pc = ComparePolicies(params);
  cmp["report_max_separating"] =
      pc.max_separating ? ToJson(pc.max_separating->report) : Json(nullptr);
  Json classes = Json::array();
  for (size_t i = 0; i < pc.report_all.size(); ++i) {
    Json c;
    c["label"] = pc.report_all[i].label.ToString();
    c["report"] = ToJson(pc.report_all[i].report);
    c["payoff_delta"] = i < pc.payoff_delta.size() ? Num(pc.payoff_delta[i]) : Json(nullptr);
    classes.push_back(c);
  }
  cmp["report_all"] = classes;
  j["comparison"] = cmp;
  return j;
}

std::string AnalyzeText(const Json& j) {
  std::ostringstream os;
  const Json& p = j["params"];
  os << "params      alpha=" << Fmt(p["alpha"]) << " p=" << Fmt(p["p"]) << " phi=" << Fmt(p["phi"])
     << " k=" << p["k"].get<int>() << "\n";
  os << "thresholds\n";
  for (const auto& [name, v] : j["thresholds"].items()) os << "  " << name << "  " << Fmt(v) << "\n";
  os << "regions\n";
  for (const auto& [name, v] : j["regions"].items()) {
    if (v.is_boolean()) {
      os << "  " << name << "  " << Yes(v.get<bool>()) << "\n";
    } else {
      std::string r;
      for (const Json& iv : v) {
        if (!r.empty()) r += " U ";
        r += "[" + Fmt(iv[0]) + ", " + Fmt(iv[1]) + "]";
      }
      os << "  " << name << "  " << (r.empty() ? "{}" : r) << "\n";
    }
  }
  os << "equilibria\n";
  for (const Json& e : j["equilibria"]) {
    std::string accept;
    for (const Json& s : e["accept"]) accept += (accept.empty() ? "" : ",") + s.get<std::string>();
    os << "  " << e["rule"].get<std::string>() << " " << e["label"].get<std::string>()
       << "  accept{" << accept << "}  " << (e["verified"].get<bool>() ? "verified" : "NOT VERIFIED")
       << "\n    " << ReportLine(e["report"]) << "\n";
  }
  os << "comparison\n";
  const Json& c = j["comparison"];
  if (c.contains("payoff_gap")) {
    os << "  payoff_gap (first-score minus max separating)  " << Fmt(c["payoff_gap"]) << "\n";
  }
  if (!c["report_max_separating"].is_null()) {
    os << "  report_max separating\n    " << ReportLine(c["report_max_separating"]) << "\n";
  }
  for (const Json& r : c["report_all"]) {
    os << "  report_all " << r["label"].get<std::string>() << "  payoff_delta "
       << Fmt(r["payoff_delta"]) << "\n    " << ReportLine(r["report"]) << "\n";
  }
  return os.str();
}

// --------------------------------------------------------------- enumerate

Json Enumerate(const ModelParams& params, PolicyScope scope) {
  EnumerationResult r = EnumerateOutcomes(params, scope);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "enumerate";
  j["params"] = ToJson(params);
  j["scope"] = ScopeName(scope);
  j["policies_examined"] = r.policies_examined;
  j["profiles_verified"] = r.profiles_verified;
  j["boundary"] = r.boundary;
  Json classes = Json::array();
  for (const OutcomeEntry& e : r.classes) {
    Verdict v = VerifyEquilibrium(params, e.witness);
    Json c;
    c["rule"] = RuleName(e.rule);
    c["label"] = e.label.ToString();
    c["admit"] = ToJson(e.outcome);
    c["supporting_policies"] = e.supporting_policies;
    c["college_payoff"] = Num(CollegePayoff(params, e.outcome));
    c["witness"] = ToJson(e.witness);
    c["verified"] = v.ok;
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j;
}

std::string EnumerateText(const Json& j) {
  std::ostringstream os;
  const Json& p = j["params"];
  os << "params   alpha=" << Fmt(p["alpha"]) << " p=" << Fmt(p["p"]) << " phi=" << Fmt(p["phi"])
     << " k=" << p["k"].get<int>() << "  scope " << j["scope"].get<std::string>() << "\n";
  os << "policies " << j["policies_examined"].get<long>() << " examined, "
     << j["profiles_verified"].get<long>() << " supported\n";
  if (j["boundary"].get<bool>()) os << "boundary p sits on a threshold\n";
  os << "classes  " << j["classes"].size() << "\n";
  for (const Json& c : j["classes"]) {
    os << "  " << c["rule"].get<std::string>() << " " << c["label"].get<std::string>() << "  ";
    for (const auto& [cohort, v] : c["admit"].items()) os << cohort << "=" << Fmt(v) << " ";
    os << " payoff " << Fmt(c["college_payoff"]) << "  policies " << c["supporting_policies"].get<int>()
       << "  " << (c["verified"].get<bool>() ? "verified" : "NOT VERIFIED") << "\n";
    const Json& w = c["witness"];
    std::string accept;
    for (const Json& s : w["accept"]) accept += (accept.empty() ? "" : ",") + s.get<std::string>();
    os << "    witness accept{" << accept << "}\n";
    for (const Json& f : w["strategy"]) {
      os << "      stop " << f["type"].get<std::string>() << " " << f["history"].get<std::string>()
         << " = " << Fmt(f["stop"]) << "\n";
    }
    for (const Json& iv : w["free_intervals"]) {
      os << "      continue mass " << iv["type"].get<std::string>() << " "
         << iv["history"].get<std::string>() << " in [" << Fmt(iv["continue_min"]) << ", "
         << Fmt(iv["continue_max"]) << "]\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- simulate

EquilibriumProfile SelectProfile(const ModelParams& params, const std::string& selector) {
  auto none = [&](const std::string& why) -> GameError {
    return GameError(ErrorCode::kNoEquilibrium,
                     "profile '" + selector + "' is not constructible at " + params.ToString() +
                         ": " + why);
  };
  if (selector == "first-score") {
    if (params.p < 1 - params.alpha || params.p > params.alpha) throw none("needs 1-alpha <= p <= alpha");
    return ConstructFirstScoreEquilibrium(params);
  }
  if (selector == "max-separating") {
    if (auto s = ReportMaxSeparating(params)) return *s;
    throw none("p lies outside [p_hat_k, p_hat_prime_k]");
  }
  if (selector == "reject-all") {
    if (params.k != 2) throw none("reject-all is analyzed for k = 2 only");
    auto region = ReportMaxRejectAll(params);
    if (!region) throw none("p exceeds p_hat_hat");
    return BuildReportMaxRejectAll(params, 0, region->XLow(0).lo);
  }
  const std::string prefix = "non-first-score";
  if (selector.rfind(prefix, 0) == 0) {
    int n = 2;
    if (selector.size() > prefix.size()) {
      if (selector[prefix.size()] != ':') throw none("expected non-first-score:N");
      try {
        n = std::stoi(selector.substr(prefix.size() + 1));
      } catch (const std::exception&) {
        throw GameError(ErrorCode::kMalformed, "bad index in '" + selector + "'");
      }
    }
    if (auto s = ConstructNonFirstScoreEquilibrium(params, n)) return *s;
    throw none("p lies outside [p*_n, p*_(n-1)] within [1-alpha, alpha]");
  }
  throw GameError(ErrorCode::kMalformed,
                  "unknown profile '" + selector +
                      "' (first-score, max-separating, reject-all, non-first-score:N)");
}

Json SimulateJson(const ModelParams& params, const std::string& selector, std::uint64_t n,
                  std::uint64_t seed, double tol) {
  EquilibriumProfile profile = SelectProfile(params, selector);
  SimConfig config{n, seed, params, profile, 0};
  EmpiricalReport emp = Simulate(config);
  FairnessReport ana = ComputeFairnessReport(params, profile);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "simulate";
  j["params"] = ToJson(params);
  j["profile"] = selector;
  j["n"] = n;
  j["seed"] = seed;
  j["tolerance"] = tol;
  j["empirical"] = ToJson(emp);
  Json ajson = ToJson(ana);
  j["analytic"] = ajson;
  Json checks = Json::array();
  bool all = true;
  for (const char* key : {"fnr_cat1", "fnr_cat2", "fpr_cat1", "fpr_cat2", "fnr_gap", "fpr_gap",
                          "ppv", "npv", "college_payoff"}) {
    const Json& e = j["empirical"][key];
    const Json& a = ajson[key];
    Json c;
    c["metric"] = key;
    c["empirical"] = e;
    c["analytic"] = a;
    bool pass;
    if (e.is_null() || a.is_null()) {
      pass = e.is_null() == a.is_null();
      c["abs_diff"] = nullptr;
    } else {
      double d = std::fabs(e.get<double>() - a.get<double>());
      c["abs_diff"] = d;
      pass = d <= tol;
    }
    c["pass"] = pass;
    all = all && pass;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["all_pass"] = all;
  return j;
}

std::string SimulateText(const Json& j) {
  std::ostringstream os;
  const Json& p = j["params"];
  os << "params   alpha=" << Fmt(p["alpha"]) << " p=" << Fmt(p["p"]) << " phi=" << Fmt(p["phi"])
     << " k=" << p["k"].get<int>() << "  profile " << j["profile"].get<std::string>() << "\n";
  os << "sample   n=" << j["n"].get<std::uint64_t>() << " seed=" << j["seed"].get<std::uint64_t>()
     << " tolerance=" << Fmt(j["tolerance"]) << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-16s %-16s %-16s %-12s %s\n", "metric", "empirical",
                "analytic", "abs_diff", "result");
  os << line;
  for (const Json& c : j["checks"]) {
    std::snprintf(line, sizeof(line), "%-16s %-16s %-16s %-12s %s\n",
                  c["metric"].get<std::string>().c_str(), Fmt(c["empirical"]).c_str(),
                  Fmt(c["analytic"]).c_str(), Fmt(c["abs_diff"]).c_str(),
                  c["pass"].get<bool>() ? "pass" : "FAIL");
    os << line;
  }
  os << (j["all_pass"].get<bool>() ? "all metrics within tolerance\n"
                                   : "some metrics outside tolerance\n");
  return os.str();
}

// ------------------------------------------------------------------- sweep

const char* kCsvHeader =
    "alpha,p,phi,k,policy,equilibrium_class,fnr_cat1,fnr_cat2,fpr_cat1,fpr_cat2,fnr_gap,"
    "fpr_gap,ppv,npv,college_payoff,boundary_flag";

struct SweepRow {
  ModelParams params;
  std::string policy;
  std::string label;
  std::optional<FairnessReport> report;
  bool boundary;
};

std::vector<Rational> ParseList(const std::string& text, const char* name) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    out.push_back(ParseRational(item));
  }
  if (out.empty()) throw GameError(ErrorCode::kInvalidParams, std::string("empty list for --") + name);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SweepRow> SweepPoint(const ModelParams& params) {
  std::vector<SweepRow> rows;
  bool boundary = IsCriticalPrior(params);
  for (ReportingRule rule : {ReportingRule::kReportAll, ReportingRule::kReportMax}) {
    std::vector<OutcomeEntry> classes = ClassesFor(params, rule);
    if (classes.empty()) rows.push_back(SweepRow{params, RuleName(rule), "none", std::nullopt, boundary});
    for (const OutcomeEntry& e : classes) {
      rows.push_back(SweepRow{params, RuleName(rule), e.label.ToString(),
                              ComputeFairnessReport(params, e.witness), boundary});
    }
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const SweepRow& r : rows) {
    std::vector<std::string> cells = {Cell(r.params.alpha), Cell(r.params.p), Cell(r.params.phi),
                                      std::to_string(r.params.k), r.policy, r.label};
    if (r.report) {
      const FairnessReport& f = *r.report;
      for (const auto& v : {f.fnr[0], f.fnr[1], f.fpr[0], f.fpr[1], f.fnr_gap, f.fpr_gap, f.ppv,
                            f.npv, std::optional<Rational>(f.college_payoff)}) {
        cells.push_back(Cell(v));
      }
    } else {
      cells.insert(cells.end(), 9, "");
    }
    cells.push_back(r.boundary ? "1" : "0");
    for (size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += "\n";
  }
  return out;
}

std::string SweepJson(const std::vector<SweepRow>& rows) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "sweep";
  Json list = Json::array();
  for (const SweepRow& r : rows) {
    Json row = ToJson(r.params);
    row["policy"] = r.policy;
    row["equilibrium_class"] = r.label;
    Json rep = r.report ? ToJson(*r.report) : Json::object();
    for (auto& [key, v] : rep.items()) row[key] = v;
    row["boundary_flag"] = r.boundary ? 1 : 0;
    list.push_back(row);
  }
  j["rows"] = list;
  return DumpJson(j);
}

// ------------------------------------------------------------------ tables

Json Tables(const Rational& alpha, int k) {
  RateTable max = SeparatingMaxRates(alpha, k);
  RateTable all = FirstScoreRates(alpha);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "tables";
  j["alpha"] = Num(alpha);
  j["k"] = k;
  auto side = [](const RateTable& t, bool fnr) {
    const auto& v = fnr ? t.fnr : t.fpr;
    return Json{{"cat1", Num(v[0])}, {"cat2", Num(v[1])}};
  };
  j["false_negative"] = Json{{"max", side(max, true)}, {"all", side(all, true)}};
  j["false_positive"] = Json{{"max", side(max, false)}, {"all", side(all, false)}};
  return j;
}

std::string TablesText(const Json& j) {
  std::ostringstream os;
  os << "alpha=" << Fmt(j["alpha"]) << " k=" << j["k"].get<int>() << "\n";
  char line[120];
  for (const char* table : {"false_negative", "false_positive"}) {
    os << "\n" << table << "\n";
    std::snprintf(line, sizeof(line), "%-8s %-16s %-16s\n", "policy", "category 1", "category 2");
    os << line;
    for (const char* policy : {"max", "all"}) {
      const Json& r = j[table][policy];
      std::snprintf(line, sizeof(line), "%-8s %-16s %-16s\n", policy == std::string("max") ? "Max" : "All",
                    Fmt(r["cat1"]).c_str(), Fmt(r["cat2"]).c_str());
      os << line;
    }
  }
  return os.str();
}

std::string TablesCsv(const Json& j) {
  std::string out = "table,policy,cat1,cat2\n";
  for (const char* table : {"false_negative", "false_positive"}) {
    for (const char* policy : {"max", "all"}) {
      const Json& r = j[table][policy];
      out += std::string(table) + "," + policy + "," + Fmt(r["cat1"]) + "," + Fmt(r["cat2"]) + "\n";
    }
  }
  return out;
}

void CheckFormat(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw GameError(ErrorCode::kMalformed, "unsupported --format '" + format + "'");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of the standardized-testing game under Report Max and Report All",
               "scoregame"};
  app.require_subcommand(1);

  std::string format, out_path;
  auto add_io = [&](CLI::App* cmd, const std::string& formats) {
    cmd->add_option("--format", format, formats);
    cmd->add_option("--out", out_path, "write to this file instead of stdout");
  };

  PointFlags point;
  auto* analyze = app.add_subcommand("analyze", "thresholds, regions, equilibria and metrics at a point");
  AddPointFlags(analyze, point);
  add_io(analyze, "text (default) or json");

  std::string scope_text = "report-all";
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive equilibrium outcome classes");
  AddPointFlags(enumerate, point);
  enumerate->add_option("--scope", scope_text, "report-all, report-max or families")
      ->default_val("report-all");
  add_io(enumerate, "text (default) or json");

  std::string profile = "first-score";
  std::uint64_t n = 1000000, seed = 42;
  double tol = 0.005;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of a constructed profile");
  AddPointFlags(simulate, point);
  simulate->add_option("--profile", profile,
                       "first-score, max-separating, reject-all or non-first-score:N")
      ->default_val("first-score");
  simulate->add_option("--n", n, "number of students")->default_val(1000000);
  simulate->add_option("--seed", seed, "random seed")->default_val(42);
  simulate->add_option("--tol", tol, "absolute tolerance per metric")->default_val(0.005);
  add_io(simulate, "text (default) or json");

  std::string alphas = "0.6,0.7,0.8,0.9", ps, phis = "0,0.3,0.5,0.8,1", ks = "2,3";
  for (int i = 1; i <= 19; ++i) ps += (i > 1 ? "," : "") + FormatDecimal(i * 0.05);
  auto* sweep = app.add_subcommand("sweep", "grid of points, one row per policy and class");
  sweep->add_option("--alpha", alphas, "comma-separated alpha values")->default_val(alphas);
  sweep->add_option("--p", ps, "comma-separated p values")->default_val(ps);
  sweep->add_option("--phi", phis, "comma-separated phi values")->default_val(phis);
  sweep->add_option("--k", ks, "comma-separated k values")->default_val(ks);
  add_io(sweep, "csv (default) or json");

  auto* tables = app.add_subcommand("tables", "false negative and false positive rate tables");
  AddPointFlags(tables, point, false);
  add_io(tables, "text (default), csv or json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (format.empty()) format = sweep->parsed() ? "csv" : "text";
    if (analyze->parsed()) {
      CheckFormat(format, {"text", "json"});
      Json j = Analyze(ParsePoint(point));
      Emit(format == "json" ? DumpJson(j) : AnalyzeText(j), out_path, out);
    } else if (enumerate->parsed()) {
      CheckFormat(format, {"text", "json"});
      Json j = Enumerate(ParsePoint(point), ParseScope(scope_text));
      Emit(format == "json" ? DumpJson(j) : EnumerateText(j), out_path, out);
    } else if (simulate->parsed()) {
      CheckFormat(format, {"text", "json"});
      Json j = SimulateJson(ParsePoint(point), profile, n, seed, tol);
      Emit(format == "json" ? DumpJson(j) : SimulateText(j), out_path, out);
    } else if (sweep->parsed()) {
      CheckFormat(format, {"csv", "json"});
      std::vector<ModelParams> points;
      std::vector<Rational> kv = ParseList(ks, "k");
      for (const Rational& a : ParseList(alphas, "alpha")) {
        for (const Rational& p : ParseList(ps, "p")) {
          for (const Rational& f : ParseList(phis, "phi")) {
            for (const Rational& k : kv) {
              if (k.get_den() != 1 || !k.get_num().fits_sint_p()) {
                throw GameError(ErrorCode::kInvalidParams, "k must be an integer");
              }
              points.push_back(ModelParams::Make(p, a, f, static_cast<int>(k.get_num().get_si())));
            }
          }
        }
      }
      std::vector<std::vector<SweepRow>> per_point(points.size());
      ParallelFor(static_cast<int>(points.size()), [&](int i) { per_point[i] = SweepPoint(points[i]); });
      std::vector<SweepRow> rows;
      for (auto& r : per_point) rows.insert(rows.end(), r.begin(), r.end());
      Emit(format == "csv" ? SweepCsv(rows) : SweepJson(rows), out_path, out);
    } else if (tables->parsed()) {
      CheckFormat(format, {"text", "csv", "json"});
      ModelParams params = ParsePoint(point);
      Json j = Tables(params.alpha, params.k);
      Emit(format == "json" ? DumpJson(j) : format == "csv" ? TablesCsv(j) : TablesText(j), out_path,
           out);
    }
  } catch (const GameError& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return 0;
}

}  // namespace scoregame
