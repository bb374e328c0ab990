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

// Acceptance run: one PASS/FAIL line per criterion, each with its pinned
// expectation and wall-clock limit. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace troptrans;

namespace {
  struct Outcome {
    bool        ok;
    std::string detail;
  };

  int failures = 0;

  void criterion(int id, char const* title, double limit_s,
                 std::function<Outcome()> const& body) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = body();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    bool const in_time = secs < limit_s;
    bool const pass    = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL",
                id, title, out.detail.c_str(), secs, limit_s,
                in_time ? "" : ", too slow");
    std::fflush(stdout);
  }

  Outcome suite(char const* name, std::size_t trials, std::uint64_t seed,
                std::size_t nmax) {
    SuiteOptions opt;
    opt.suite  = name;
    opt.trials = trials;
    opt.seed   = seed;
    opt.nmax   = nmax;
    auto rep   = run_suite(opt);
    std::string detail = std::to_string(rep.instances) + " instance(s), "
                         + std::to_string(rep.violations.size()) + " violation(s)";
    if (!rep.ok()) {
      auto const& v = rep.violations.front();
      detail += "; first: " + v.property + " in trial " + std::to_string(v.trial)
                + " (" + v.detail + ")";
    }
    return {rep.ok(), detail};
  }

  std::string show(std::int64_t v) {
    return std::to_string(v);
  }
}  // namespace

int main() {
  criterion(1, "Wielandt numbers W(1), W(2), W(5), W(7) = 0, 2, 17, 37", 1, [] {
    std::vector<std::int64_t> got{wielandt_number(1), wielandt_number(2),
                                  wielandt_number(5), wielandt_number(7)};
    bool ok = got == std::vector<std::int64_t>{0, 2, 17, 37};
    return Outcome{ok, show(got[0]) + ", " + show(got[1]) + ", " + show(got[2])
                           + ", " + show(got[3])};
  });

  criterion(2, "Schwarz example: T_4 = 11 = Schwarz bound for n = 7, d = 2", 1, [] {
    auto const a  = support::load("schwarz7.json");
    auto const t  = row_transient(a, 3).transient;
    auto const cg = critical_graph(a);
    auto const b  = bounds_main1(7, 2, static_cast<std::int64_t>(cg.component_of(3).girth),
                                 static_cast<std::int64_t>(cg.component_of(3).size()));
    bool ok = t == 11 && b.schwarz == 11 && cyclicity(digraph_of(a)) == 2;
    return Outcome{ok, "T_4 = " + std::to_string(t) + ", Schwarz = " + show(b.schwarz)};
  });

  criterion(3, "5x5 surrogates: T_5 = 17 = Wielandt, T_4 = 14 = Dulmage-Mendelsohn",
            2, [] {
    auto const w   = support::load("wielandt5.json");
    auto const dm  = support::load("dm5.json");
    auto const tw  = row_transient(w, 4).transient;
    auto const tdm = row_transient(dm, 3).transient;
    auto const bw  = main1_bounds_for(w, critical_graph(w), 4);
    auto const bdm = main1_bounds_for(dm, critical_graph(dm), 3);
    // the critical matrices carry the same transients from below
    auto const cw  = row_transient(critical_matrix(w), 4).transient;
    auto const cdm = row_transient(critical_matrix(dm), 3).transient;
    bool ok = tw == 17 && bw.wielandt == 17 && cw == 17 && tdm == 14
              && bdm.dulmage_mendelsohn == 14 && cdm == 14;
    return Outcome{ok, "T_5 = " + std::to_string(tw) + " (W = " + show(bw.wielandt)
                           + ", critical matrix " + std::to_string(cw) + "), T_4 = "
                           + std::to_string(tdm) + " (DM = "
                           + show(bdm.dulmage_mendelsohn) + ", critical matrix "
                           + std::to_string(cdm) + ")"};
  });

  criterion(4, "two-node example: entry (2,2) transient = ceil(2c)", 1, [] {
    std::string detail;
    bool        ok = true;
    for (auto [c, expect] : std::vector<std::pair<std::string, std::size_t>>{
             {"1/2", 1}, {"1", 2}, {"5/2", 5}, {"10", 20}}) {
      auto const a   = support::mat({{"0", "-" + c}, {"-" + c, "-1"}});
      auto const lib = entry_transient(a, 1, 1, 1, expect + 4).transient;
      auto const pw  = oracle::powers(oracle::grid(a), expect + 4);
      std::vector<oracle::OQ> seq;
      for (auto const& m : pw) {
        seq.push_back(m[1][1]);
      }
      auto const brute = oracle::eventual_start(seq, 1);
      ok = ok && lib == expect && brute == expect;
      detail += (detail.empty() ? "" : ", ") + std::string("c = ") + c + ": "
                + std::to_string(lib);
    }
    return Outcome{ok, detail};
  });

  criterion(5, "exhaustive Boolean digraphs n <= 4 within the classical bounds", 120,
            [] { return suite("boolean-classics", 1, 0, 4); });

  criterion(6, "500 random irreducible instances n <= 8: size bounds and least "
               "periods",
            600, [] { return suite("main1", 500, 42, 8); });

  criterion(7, "200 low-rank instances r <= n/2: rank bounds and related girths",
            600, [] { return suite("main2", 200, 7, 8); });

  criterion(8, "300 instances: supporting lemmas", 600,
            [] { return suite("lemmas", 300, 3, 8); });

  criterion(9, "1000 walk triples and 50 power identities: cycle replacement",
            300, [] { return suite("pumping", 1000, 9, 8); });

  std::printf("%d criterion/criteria failed\n", failures);
  return failures;
}
