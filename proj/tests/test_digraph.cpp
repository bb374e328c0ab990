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

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace troptrans;

namespace {
  Digraph from_mask(unsigned mask, std::size_t n) {
    Digraph d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> (i * n + j)) & 1U) {
          d.add_edge(i, j);
        }
      }
    }
    return d;
  }

  Digraph cycle(std::size_t n) {
    Digraph d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.add_edge(i, (i + 1) % n);
    }
    return d;
  }
}  // namespace

TEST_CASE("components agree with mutual reachability", "[digraph][property]") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n     = 1 + trial % 7;
    auto const        d     = oracle::random_digraph(rng, n, 0.25);
    auto const        r     = oracle::reach(oracle::adjacency(d));
    auto const        comps = strongly_connected_components(d);
    std::vector<std::size_t> id(n);
    std::size_t              covered = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      CHECK(std::is_sorted(comps[c].begin(), comps[c].end()));
      if (c > 0) {
        CHECK(comps[c - 1].front() < comps[c].front());
      }
      for (auto v : comps[c]) {
        id[v] = c;
        ++covered;
      }
    }
    CHECK(covered == n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK((id[i] == id[j]) == (r[i][j] && r[j][i]));
      }
    }
    CHECK(is_strongly_connected(d) == (comps.size() == 1));
  }
}

TEST_CASE("cyclicity, classes and girth agree with cycle enumeration",
          "[digraph][property]") {
  std::mt19937_64 rng(22);
  int             checked = 0;
  while (checked < 300) {
    std::size_t const n = 1 + checked % 6;
    auto const        d = oracle::random_digraph(rng, n, 0.35);
    if (!is_strongly_connected(d) || d.edge_count() == 0) {
      continue;
    }
    ++checked;
    auto const adj = oracle::adjacency(d);
    auto const cy  = cyclicity(d);
    CHECK(cy == oracle::gcd_of_cycle_lengths(adj));
    CHECK(girth(d) == oracle::min_cycle_length(adj));
    for (auto const& c : oracle::simple_cycles(adj)) {
      CHECK(c.size() % cy == 0);
    }
    auto const classes = cyclicity_classes(d);
    REQUIRE(classes.size() == cy);
    CHECK(std::find(classes[0].begin(), classes[0].end(), 0) != classes[0].end());
    std::vector<std::size_t> cls(n);
    for (std::size_t s = 0; s < cy; ++s) {
      for (auto v : classes[s]) {
        cls[v] = s;
      }
    }
    for (auto [i, j] : d.edges()) {
      CHECK(cls[j] == (cls[i] + 1) % cy);
    }
  }
}

TEST_CASE("small digraph facts", "[digraph]") {
  CHECK(cyclicity(cycle(4)) == 4);
  CHECK(girth(cycle(4)) == 4);
  auto const classes = cyclicity_classes(cycle(4));
  CHECK(classes == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}});
  Digraph loop(1, {{0, 0}});
  CHECK(cyclicity(loop) == 1);
  CHECK(girth(loop) == 1);
  CHECK_THROWS_AS(cyclicity(Digraph(1)), InvalidArgument);
  CHECK_THROWS_AS(girth(Digraph(3, {{0, 1}, {1, 2}})), Error);
  CHECK_THROWS_AS(cyclicity(Digraph(2, {{0, 1}})), NotStronglyConnected);
  CHECK_THROWS_AS(graph_power(cycle(3), 0), InvalidArgument);
  CHECK(shortest_cycle_through(cycle(5), 2) == std::optional<std::size_t>(5));
  CHECK_FALSE(shortest_cycle_through(Digraph(2, {{0, 1}}), 0).has_value());
}

TEST_CASE("powers of a strongly connected digraph split into gcd(k, d) "
          "components",
          "[digraph][exhaustive]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned mask = 1; mask < (1U << (n * n)); ++mask) {
      auto const d = from_mask(mask, n);
      if (!is_strongly_connected(d)) {
        continue;
      }
      auto const cy = cyclicity(d);
      for (std::size_t k = 1; k <= 2 * n; ++k) {
        auto const p     = graph_power(d, k);
        auto const comps = strongly_connected_components(p);
        auto const g     = std::gcd(k, cy);
        REQUIRE(comps.size() == g);
        for (auto const& c : comps) {
          auto const sub = induced_subgraph(p, c);
          REQUIRE(cyclicity(sub) == cy / g);
        }
      }
    }
  }
}

TEST_CASE("powers of a random strongly connected digraph on 5 nodes",
          "[digraph][property]") {
  std::mt19937_64 rng(23);
  int             checked = 0;
  while (checked < 200) {
    auto const d = oracle::random_digraph(rng, 5, 0.3);
    if (!is_strongly_connected(d)) {
      continue;
    }
    ++checked;
    auto const cy = cyclicity(d);
    for (std::size_t k = 1; k <= 10; ++k) {
      auto const comps = strongly_connected_components(graph_power(d, k));
      CHECK(comps.size() == std::gcd(k, cy));
    }
    CHECK(graph_power(d, 6) == graph_power(graph_power(d, 2), 3));
    CHECK(graph_power(d, 1) == d);
  }
}

TEST_CASE("walks", "[digraph]") {
  Digraph const d(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
  Walk const    w{{0, 1, 1, 2, 0}};
  CHECK(is_walk_in(d, w));
  CHECK(w.length() == 4);
  CHECK(w.is_closed());
  CHECK_FALSE(w.is_cycle());
  CHECK(Walk{{0, 1, 2, 0}}.is_cycle());
  CHECK(Walk{{2}}.is_path());
  CHECK(Walk{{2}}.length() == 0);
  CHECK_FALSE(is_walk_in(d, Walk{{0, 2}}));
  auto const dist = bfs_distances(d, 0);
  CHECK(dist == std::vector<std::size_t>{0, 1, 2});
  TropMatrix a(3);
  a(0, 1) = rational_weight(-1);
  a(1, 2) = rational_weight(1, 2);
  CHECK(walk_weight(a, Walk{{0, 1, 2}}) == rational_weight(-1, 2));
  CHECK(walk_weight(a, Walk{{0, 2}}).is_bottom());
  CHECK(digraph_of(a).edge_count() == 2);
  CHECK(d.reversed().has_edge(0, 2));
}
