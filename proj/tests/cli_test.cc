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

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.h"
#include "json.hpp"

namespace scoregame {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

const char* kHeader =
    "alpha,p,phi,k,policy,equilibrium_class,fnr_cat1,fnr_cat2,fpr_cat1,fpr_cat2,fnr_gap,"
    "fpr_gap,ppv,npv,college_payoff,boundary_flag";

TEST_CASE("analyze reports the payoff delta") {
  Run r = Cli({"analyze", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.032") != std::string::npos);
  Run j = Cli({"analyze", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["comparison"]["payoff_gap"].get<double>() == doctest::Approx(0.032));
}

TEST_CASE("analyze rejects an uninformative test") {
  Run r = Cli({"analyze", "--alpha", "0.4", "--p", "0.3", "--phi", "0.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha") != std::string::npos);
  CHECK(r.out.empty());
}

void CollectGaps(const nlohmann::json& node, std::vector<double>& gaps) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (key.find("gap") != std::string::npos || key == "payoff_delta") {
        if (value.is_number()) gaps.push_back(value.get<double>());
      } else {
        CollectGaps(value, gaps);
      }
    }
  } else if (node.is_array()) {
    for (const auto& v : node) CollectGaps(v, gaps);
  }
}

TEST_CASE("analyze with a noiseless test reports zero gaps") {
  Run r = Cli({"analyze", "--alpha", "1.0", "--p", "0.3", "--phi", "0.5", "--k", "2", "--format",
               "json"});
  REQUIRE(r.code == 0);
  std::vector<double> gaps;
  CollectGaps(nlohmann::json::parse(r.out), gaps);
  CHECK(gaps.size() >= 5u);
  for (double g : gaps) CHECK(g == 0.0);
}

TEST_CASE("json output round trips") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"analyze", "--alpha", "0.8", "--p", "0.6", "--phi", "0.5", "--k", "3"},
        std::vector<std::string>{"enumerate", "--alpha", "0.8", "--p", "0.25", "--phi", "0.5",
                                 "--scope", "report-max"},
        std::vector<std::string>{"tables", "--alpha", "0.8", "--phi", "0.5", "--k", "3"},
        std::vector<std::string>{"sweep", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--k", "2"},
        std::vector<std::string>{"simulate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--n",
                                 "20000"}}) {
    args.push_back("--format");
    args.push_back("json");
    Run r = Cli(args);
    REQUIRE(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("enumerate reproduces the class counts") {
  auto count = [](std::vector<std::string> args) {
    args.insert(args.end(), {"--format", "json"});
    Run r = Cli(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out)["classes"].size();
  };
  CHECK(count({"enumerate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--k", "2"}) == 1u);
  CHECK(count({"enumerate", "--alpha", "0.8", "--p", "0.25", "--phi", "0.5", "--k", "2", "--scope",
               "report-max"}) == 2u);
  CHECK(count({"enumerate", "--alpha", "0.8", "--p", "0.6", "--phi", "0.5", "--k", "3"}) >= 2u);
  Run text = Cli({"enumerate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5"});
  CHECK(text.out.find("first_score") != std::string::npos);
  CHECK(text.out.find("verified") != std::string::npos);
}

TEST_CASE("enumerate refuses exhaustive scope beyond three tests") {
  Run r = Cli({"enumerate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--k", "4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("families") != std::string::npos);
}

TEST_CASE("tables") {
  Run r = Cli({"tables", "--alpha", "0.8", "--phi", "0.5", "--k", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines = SplitLines(r.out);
  CHECK(lines[1] == "false_negative,max,0.2,0.04");
  CHECK(lines[2] == "false_negative,all,0.2,0.2");
  Run k3 = Cli({"tables", "--alpha", "0.8", "--phi", "0.5", "--k", "3", "--format", "csv"});
  CHECK(SplitLines(k3.out)[1] == "false_negative,max,0.2,0.008");
  Run perfect = Cli({"tables", "--alpha", "1", "--phi", "0.5", "--k", "3", "--format", "csv"});
  for (const std::string& line : SplitLines(perfect.out)) {
    if (line.rfind("table", 0) == 0) continue;
    std::vector<std::string> cells = SplitCells(line);
    CHECK(cells[2] == "0");
    CHECK(cells[3] == "0");
  }
}

TEST_CASE("sweep csv schema, parity and determinism") {
  std::vector<std::string> args = {"sweep", "--alpha", "0.7,0.8", "--p", "0.35,0.4,0.45",
                                   "--phi", "0.3,0.5", "--k", "2"};
  Run a = Cli(args);
  Run b = Cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::vector<std::string> lines = SplitLines(a.out);
  REQUIRE(!lines.empty());
  CHECK(lines[0] == kHeader);
  int report_all = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = SplitCells(lines[i]);
    REQUIRE(cells.size() == 16u);
    CHECK(lines[i].find("nan") == std::string::npos);
    if (cells[4] == "report_all") {
      ++report_all;
      CHECK(cells[5] == "first_score");
      CHECK(cells[10] == "0");
      CHECK(cells[11] == "0");
    }
  }
  CHECK(report_all == 12);
}

TEST_CASE("sweep writes files and reports unwritable paths") {
  auto path = std::filesystem::temp_directory_path() / "scoregame_cli_test.csv";
  Run ok = Cli({"sweep", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--k", "2", "--out",
                path.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == kHeader);
  std::filesystem::remove(path);

  Run bad = Cli({"sweep", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--k", "2", "--out",
                 "/nonexistent-dir/x.csv"});
  CHECK(bad.code == 4);
}

TEST_CASE("sweep rejects invalid grid values") {
  CHECK(Cli({"sweep", "--alpha", "0.8", "--p", "0,0.3"}).code == 2);
  CHECK(Cli({"sweep", "--k", "2.5"}).code == 2);
}

TEST_CASE("simulate compares against the closed form") {
  Run r = Cli({"simulate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--n", "1000000",
               "--seed", "42", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_pass"] == true);
  Run again = Cli({"simulate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--n", "1000000",
                   "--seed", "42", "--format", "json"});
  CHECK(again.out == r.out);

  Run nope = Cli({"simulate", "--alpha", "0.8", "--p", "0.1", "--phi", "0.5", "--profile",
                  "first-score"});
  CHECK(nope.code == 3);
  CHECK(nope.err.find("not constructible") != std::string::npos);
  CHECK(Cli({"simulate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--profile", "x"}).code == 2);
  CHECK(Cli({"simulate", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--n", "0"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"analyze", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--bogus", "1"}).code == 2);
  CHECK(Cli({"analyze", "--alpha", "0.8", "--phi", "0.5"}).code == 2);
  CHECK(Cli({"analyze", "--alpha", "0.8", "--p", "0.3", "--phi", "0.5", "--format", "csv"}).code == 2);
  Run help = Cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("sweep") != std::string::npos);
}

}  // namespace
}  // namespace scoregame
