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

#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace troptrans;

namespace {
  std::set<std::size_t> cycle_lengths(TropMatrix const& a) {
    std::set<std::size_t> out;
    for (auto const& c : oracle::simple_cycles(oracle::adjacency(oracle::grid(a)))) {
      out.insert(c.size());
    }
    return out;
  }
}  // namespace

TEST_CASE("generators are deterministic and strongly connected", "[harness]") {
  for (auto st : {Structure::free, Structure::boolean}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GenSpec spec;
      spec.n         = 1 + seed % 8;
      spec.seed      = seed;
      spec.structure = st;
      spec.density   = 0.1 + 0.01 * static_cast<double>(seed);
      auto const a   = gen_irreducible(spec);
      CHECK(a == gen_irreducible(spec));
      CHECK(is_irreducible(a));
      CHECK(max_cycle_mean(a).is_finite());
      if (st == Structure::boolean) {
        CHECK(pattern(a) == a);
      }
    }
  }
  GenSpec one;
  one.n = 1;
  CHECK(gen_irreducible(one)(0, 0).is_finite());
}

TEST_CASE("planted cycles reproduce the Schwarz and Wielandt families",
          "[harness]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.n         = 7;
    spec.seed      = seed;
    spec.structure = Structure::planted_cycles;
    spec.planted   = {6, 4};
    auto const a   = gen_irreducible(spec);
    CHECK(cycle_lengths(a) == std::set<std::size_t>{4, 6});
    CHECK(cyclicity(digraph_of(a)) == 2);
    auto const cg = critical_graph(a);
    REQUIRE(cg.components.size() == 1);
    CHECK(cg.components[0].size() == 6);
    CHECK(row_transient(a, 3).transient <= 11);

    spec.n       = 5;
    spec.planted = {5, 4};
    auto const w = gen_irreducible(spec);
    CHECK(cycle_lengths(w) == std::set<std::size_t>{4, 5});
    CHECK(cyclicity(digraph_of(w)) == 1);
  }
  GenSpec bad;
  bad.n         = 3;
  bad.structure = Structure::planted_cycles;
  bad.planted   = {4};
  CHECK_THROWS_AS(gen_irreducible(bad), InvalidArgument);
  bad.planted = {2, 9};
  CHECK_THROWS_AS(gen_irreducible(bad), InvalidArgument);
  bad.planted = {3};
  bad.weights = {Rational(1)};
  CHECK_THROWS_AS(gen_irreducible(bad), InvalidArgument);
}

TEST_CASE("planted extra nodes keep the cycle lengths", "[harness]") {
  GenSpec spec;
  spec.n         = 8;
  spec.structure = Structure::planted_cycles;
  spec.planted   = {4};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    spec.seed    = seed;
    auto const a = gen_irreducible(spec);
    CHECK(is_irreducible(a));
    CHECK(cyclicity(digraph_of(a)) == 4);
  }
}

TEST_CASE("low-rank generator", "[harness]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.n         = 2 + seed % 6;
    spec.rank      = 1 + seed % (spec.n / 2 + 1) % spec.n;
    spec.seed      = seed;
    spec.density   = 0.5;
    spec.structure = Structure::low_rank;
    auto const [a, f] = gen_low_rank(spec);
    CHECK(validate_factorization(a, f).valid());
    CHECK(f.width() == spec.rank);
    if (spec.rank == 1) {
      std::size_t const n = spec.n;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
              if (a(i, j).is_finite() && a(k, l).is_finite() && a(i, l).is_finite()
                  && a(k, j).is_finite()) {
                CHECK(a(i, j).value() + a(k, l).value()
                      == a(i, l).value() + a(k, j).value());
              }
            }
          }
        }
      }
    }
  }
  GenSpec bad;
  bad.n    = 3;
  bad.rank = 4;
  CHECK_THROWS_AS(gen_low_rank(bad), InvalidArgument);
}

TEST_CASE("checks are clean on the bundled extremal matrices", "[harness]") {
  for (auto const* name : {"schwarz7.json", "wielandt5.json", "dm5.json"}) {
    auto const a = support::load(name);
    CHECK(check_main1(a).empty());
    CHECK(check_lemmas(a).empty());
    Factorization<Rational> trivial{a, TropMatrix::identity(a.dim())};
    CHECK(check_main2(a, trivial).empty());
  }
}

TEST_CASE("a broken factorization is reported", "[harness]") {
  auto const              a = support::load("dm5.json");
  Factorization<Rational> f{TropMatrix::identity(5), TropMatrix::identity(5)};
  auto const              v = check_main2(a, f);
  REQUIRE(v.size() == 1);
  CHECK(v[0].property == "main2.factorization");
  auto const j = to_json(v[0]);
  CHECK(j["instance"]["matrix"]["n"] == 5);
  CHECK(j["node"].is_null());
}

TEST_CASE("suites are deterministic across thread counts", "[harness]") {
  for (auto const& suite : {"main1", "main2", "lemmas", "pumping"}) {
    SuiteOptions opt;
    opt.suite   = suite;
    opt.trials  = 30;
    opt.seed    = 5;
    opt.nmax    = 6;
    opt.threads = 1;
    auto const one = run_suite(opt);
    opt.threads    = 3;
    auto const three = run_suite(opt);
    CHECK(one.ok());
    CHECK(to_json(one).dump() == to_json(three).dump());
  }
  SuiteOptions none;
  none.suite  = "main1";
  none.trials = 0;
  auto const r = run_suite(none);
  CHECK(r.ok());
  CHECK(r.instances == 0);
  none.suite = "nope";
  CHECK_THROWS_AS(run_suite(none), InvalidArgument);
}

TEST_CASE("Boolean brute force and factor rank", "[harness]") {
  using namespace troptrans::boolean;
  // 3-cycle: periodic from the start
  Mask const c3 = (Mask{1} << 1) | (Mask{1} << 5) | (Mask{1} << 6);
  CHECK(brute_force_transient(c3, 3) == 0);
  // Wielandt digraph on 4 nodes
  Mask w4 = 0;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}}) {
    w4 |= Mask{1} << (i * 4 + j);
  }
  CHECK(brute_force_transient(w4, 4) == 10);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Mask m = 0; m < (Mask{1} << (n * n)); ++m) {
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          adj[i][j] = has(m, n, i, j);
        }
      }
      REQUIRE(factor_rank(m, n) == oracle::boolean_rank(adj));
    }
  }
  CHECK(check_boolean_classics(3).empty());
}

TEST_CASE("pumping checks flag a bad Hamiltonian cycle", "[harness]") {
  auto const a = support::mat({{".", "0"}, {"0", "."}});
  auto const v = check_pumping_triple(a, Walk{{0, 0}}, Walk{{0, 1}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].property == "pumping.exception");
  CHECK(check_pumping_triple(a, Walk{{0, 1, 0}}, Walk{{0, 1}}).empty());
  CHECK(check_wielandt_identity(a).empty());
}
