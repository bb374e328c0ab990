/*
 *   Copyright 2026 The troptrans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "commands.hpp"
#include "oracles.hpp"

using namespace troptrans;
using namespace troptrans::cli;

namespace {
  std::string data(std::string const& name) {
    return std::string(TROPTRANS_DATA_DIR) + "/" + name;
  }

  std::string temp_file(std::string const& name, std::string const& content) {
    auto path = std::filesystem::temp_directory_path() / ("troptrans_test_" + name);
    std::ofstream(path) << content;
    return path.string();
  }

  json run_analyze(AnalyzeArgs const& args, int expect = 0) {
    std::ostringstream out, err;
    int const          code = cmd_analyze(args, out, err);
    INFO(err.str());
    REQUIRE(code == expect);
    return code == 0 && args.format == "json" ? json::parse(out.str()) : json();
  }

  json node(json const& report, std::size_t label) {
    for (auto const& nd : report["nodes"]) {
      if (nd["node"] == label) {
        return nd;
      }
    }
    return json();
  }
}  // namespace

TEST_CASE("analyze the bundled Schwarz example", "[cli]") {
  AnalyzeArgs args;
  args.input    = data("schwarz7.json");
  auto const r  = run_analyze(args);
  auto const n4 = node(r, 4);
  CHECK(n4["row"]["transient"] == 11);
  CHECK(n4["row"]["least_period"] == 6);
  CHECK(n4["bounds"]["schwarz"] == 11);
  CHECK(n4["bounds"]["kim"] == 13);
  CHECK(r["cyclicity"] == 2);
  CHECK(r["cyclicity_class_sizes"] == json::array({3, 4}));
  CHECK(r["lambda"] == "0");
  CHECK(r["matrix"]["transient"] == 11);
  CHECK(r["name"] == "schwarz7");
  for (auto const& nd : r["nodes"]) {
    CHECK(nd["row"]["transient"].get<int>() <= nd["bounds"]["min"].get<int>());
    CHECK(nd["column"]["transient"].get<int>() <= nd["bounds"]["min"].get<int>());
  }
}

TEST_CASE("analyze the extremal 5x5 surrogates", "[cli]") {
  AnalyzeArgs args;
  args.input = data("wielandt5.json");
  CHECK(node(run_analyze(args), 5)["row"]["transient"] == 17);
  args.input = data("dm5.json");
  auto const r = run_analyze(args);
  CHECK(node(r, 4)["row"]["transient"] == 14);
  CHECK(node(r, 4)["bounds"]["dulmage_mendelsohn"] == 14);
}

TEST_CASE("analyze the identity", "[cli]") {
  AnalyzeArgs args;
  args.input   = temp_file("id.txt", "0 . .\n. 0 .\n. . 0\n");
  auto const r = run_analyze(args);
  CHECK(r["lambda"] == "0");
  CHECK(r["irreducible"] == false);
  REQUIRE(r["nodes"].size() == 3);
  for (auto const& nd : r["nodes"]) {
    CHECK(nd["row"]["transient"] == 0);
    CHECK(nd["column"]["transient"] == 0);
  }
}

TEST_CASE("analyze reports are byte-stable", "[cli]") {
  AnalyzeArgs args;
  args.input = data("dm5.json");
  std::ostringstream a, b, err;
  REQUIRE(cmd_analyze(args, a, err) == 0);
  REQUIRE(cmd_analyze(args, b, err) == 0);
  CHECK(a.str() == b.str());
  args.format = "text";
  std::ostringstream t;
  REQUIRE(cmd_analyze(args, t, err) == 0);
  CHECK(t.str().find("node 4: row T=14") != std::string::npos);
}

TEST_CASE("analyze with a factorization", "[cli]") {
  AnalyzeArgs args;
  args.input         = temp_file("r1.json", R"({"entries": [["0", "-1"], ["-1", "-2"]]})");
  args.factorization = temp_file("r1f.json", R"({"V": [["0"], ["-1"]], "W": [["0"], ["-1"]]})");
  auto const r       = run_analyze(args);
  CHECK(r["factorization_width"] == 1);
  auto const n1 = node(r, 1);
  CHECK(n1["rank_bounds"]["wielandt"] == 1);
  CHECK(n1["rank_bounds"]["h"] == 1);
  CHECK(n1["row"]["transient"].get<int>() <= 1);
  args.factorization = temp_file("bad.json", R"({"V": [["0"], ["0"]], "W": [["0"], ["0"]]})");
  run_analyze(args, 3);
}

TEST_CASE("analyze exit codes", "[cli]") {
  AnalyzeArgs args;
  args.input = temp_file("nil.txt", ". 0\n. .\n");
  std::ostringstream out, err;
  CHECK(cmd_analyze(args, out, err) == 3);
  CHECK(err.str().find("nilpotent") != std::string::npos);
  args.input = temp_file("bad.txt", "0 x\n1 2\n");
  CHECK(cmd_analyze(args, out, err) == 2);
  args.input = "/nonexistent/matrix.json";
  CHECK(cmd_analyze(args, out, err) == 2);
  args.input  = data("dm5.json");
  args.format = "xml";
  CHECK(cmd_analyze(args, out, err) == 2);
}

TEST_CASE("analyze max-times input", "[cli]") {
  AnalyzeArgs args;
  args.input = temp_file("mt.json", R"({"convention": "max-times-float",
      "entries": [["0", "1", "0.5"], ["0", "0", "1"], ["1", "0.25", "0"]]})");
  auto const r = run_analyze(args);
  CHECK(r["convention"] == "max-times-float");
  CHECK(r["critical_components"][0]["nodes"] == json::array({1, 2, 3}));
  CHECK(node(r, 1)["row"]["period"] == 3);
}

TEST_CASE("non-critical rows with an explicit period", "[cli]") {
  AnalyzeArgs args;
  args.input   = temp_file("nc.txt", "0 -1\n-1 -3\n");
  args.period  = 1;
  args.cap     = 40;
  auto const r = run_analyze(args);
  auto const n2 = node(r, 2);
  CHECK(n2["critical"] == false);
  CHECK(n2["row"]["transient"] == 2);
}

TEST_CASE("pump", "[cli]") {
  PumpArgs args;
  args.input       = temp_file("ring.txt", ". 0 . .\n. . 0 .\n. . . 0\n0 . 0 .\n");
  args.hamiltonian = "1,2,3,4";
  args.walk        = "1,2,3,4,1,2,3,4,3";
  std::ostringstream out, err;
  REQUIRE(cmd_pump(args, out, err) == 0);
  auto const r = json::parse(out.str());
  CHECK(r["in_window"] == true);
  CHECK(r["congruent"] == true);
  CHECK(r["endpoints"] == true);
  CHECK(r["valid_walk"] == true);
  CHECK(r["window"] == json::array({10, 13}));
  args.hamiltonian = "1,2,3";
  CHECK(cmd_pump(args, out, err) == 3);
  args.walk = "1,9";
  CHECK(cmd_pump(args, out, err) == 2);
}

TEST_CASE("verify", "[cli]") {
  VerifyArgs args;
  args.suite  = "main1";
  args.trials = 0;
  std::ostringstream out, err;
  REQUIRE(cmd_verify(args, out, err) == 0);
  auto const r = json::parse(out.str());
  CHECK(r["violations"].empty());
  CHECK(r["instances"] == 0);
  args.suite  = "lemmas";
  args.trials = 10;
  args.output = temp_file("verify.json", "");
  CHECK(cmd_verify(args, out, err) == 0);
  args.suite = "unknown";
  CHECK(cmd_verify(args, out, err) == 2);
}

TEST_CASE("gen", "[cli]") {
  GenArgs args;
  args.n       = 7;
  args.planted = "6,4";
  args.seed    = 1;
  std::ostringstream a, b, err;
  REQUIRE(cmd_gen(args, a, err) == 0);
  REQUIRE(cmd_gen(args, b, err) == 0);
  CHECK(a.str() == b.str());
  auto const m = to_exact(parse_document(a.str()));
  CHECK(m.dim() == 7);
  CHECK(cyclicity(digraph_of(m)) == 2);

  GenArgs one;
  one.n = 1;
  std::ostringstream c;
  REQUIRE(cmd_gen(one, c, err) == 0);
  CHECK(to_exact(parse_document(c.str())).dim() == 1);

  GenArgs lr;
  lr.n        = 6;
  lr.low_rank = 2;
  std::ostringstream d;
  REQUIRE(cmd_gen(lr, d, err) == 0);
  auto const f = parse_factorization(d.str());
  CHECK(validate_factorization(to_exact(parse_document(d.str())), f).valid());

  GenArgs bad;
  bad.planted = "3";
  bad.boolean = true;
  CHECK(cmd_gen(bad, c, err) == 2);
  bad.boolean = false;
  bad.planted = "3,x";
  CHECK(cmd_gen(bad, c, err) == 2);
}
