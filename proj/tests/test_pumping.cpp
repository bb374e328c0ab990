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
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace troptrans;

namespace {
  Digraph ring(std::size_t n) {
    Digraph d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.add_edge(i, (i + 1) % n);
    }
    return d;
  }

  Walk ring_cycle(std::size_t n) {
    Walk c;
    for (std::size_t i = 0; i <= n; ++i) {
      c.nodes.push_back(i % n);
    }
    return c;
  }
}  // namespace

TEST_CASE("zero-sum subsets modulo n", "[pumping][property]") {
  std::mt19937_64                             rng(61);
  std::uniform_int_distribution<std::int64_t> x(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const         n = 1 + trial % 9;
    std::vector<std::int64_t> xs(n + trial % 3);
    for (auto& v : xs) {
      v = x(rng);
    }
    auto const idx = zero_mod_subset(xs, n);
    REQUIRE_FALSE(idx.empty());
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      CHECK(idx[i] < n);
      if (i > 0) {
        CHECK(idx[i] == idx[i - 1] + 1);
      }
      sum += xs[idx[i]];
    }
    CHECK(sum % static_cast<std::int64_t>(n) == 0);
  }
  CHECK(zero_mod_subset(std::vector<std::int64_t>{1, 1, 1}, 3)
        == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(zero_mod_subset(std::vector<std::int64_t>{1, 2}, 3), InvalidArgument);
  CHECK_THROWS_AS(zero_mod_subset(std::vector<std::int64_t>{1}, 0), InvalidArgument);
}

TEST_CASE("decomposition into a path and cycles", "[pumping][property]") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto              d = oracle::random_digraph(rng, n, 0.4);
    for (std::size_t i = 0; i < n; ++i) {
      d.add_edge(i, (i + 1) % n);
    }
    Walk w{{static_cast<std::size_t>(rng() % n)}};
    for (std::size_t s = 0, len = rng() % 25; s < len; ++s) {
      auto const& succ = d.successors(w.end());
      w.nodes.push_back(succ[rng() % succ.size()]);
    }
    auto const dec = decompose_walk(d, w);
    CHECK(dec.path.is_path());
    CHECK(dec.path.start() == w.start());
    CHECK(dec.path.end() == w.end());
    std::size_t total = dec.path.length();
    for (auto const& c : dec.cycles) {
      CHECK(c.is_cycle());
      CHECK(is_walk_in(d, c));
      total += c.length();
    }
    CHECK(total == w.length());
    CHECK(reassemble(dec) == w);
    auto const kept = reduce_cycles(dec.cycles, n);
    CHECK(kept.size() < std::max<std::size_t>(n, 1));
    std::size_t removed = 0;
    for (auto const& c : dec.cycles) {
      removed += c.length();
    }
    for (auto const& c : kept) {
      CHECK(c.length() % n != 0);
      removed -= c.length();
    }
    CHECK(removed % n == 0);
  }
}

TEST_CASE("cycle replacement on a bare ring", "[pumping]") {
  auto const d = ring(4);
  auto const h = ring_cycle(4);
  // a single node is pumped with copies of the ring
  auto const r = cycle_replace_detailed(d, h, Walk{{2}});
  CHECK(r.walk.length() == 12);
  CHECK(r.walk.start() == 2);
  CHECK(r.walk.end() == 2);
  CHECK(r.padding_copies == 3);
  // already in the window: unchanged
  Walk w{{0}};
  for (std::size_t i = 1; i <= 11; ++i) {
    w.nodes.push_back(i % 4);
  }
  auto const same = cycle_replace_detailed(d, h, w);
  CHECK(same.case_label == '=');
  CHECK(same.walk == w);
}

TEST_CASE("cycle replacement requires a Hamiltonian cycle", "[pumping]") {
  Digraph d(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(cycle_replace(d, Walk{{0, 1, 0}}, Walk{{0}}), InvalidArgument);
  CHECK_THROWS_AS(cycle_replace(d, Walk{{0, 1, 2, 0}}, Walk{{0, 2}}), InvalidArgument);
  CHECK(is_hamiltonian_cycle(d, Walk{{0, 1, 2, 0}}));
}

TEST_CASE("cycle replacement with long walks and detached cycles",
          "[pumping][property]") {
  std::mt19937_64 rng(63);
  int             detached = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t const n = 2 + trial % 7;
    auto              d = oracle::random_digraph(rng, n, 0.35);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Walk h;
    for (std::size_t i = 0; i <= n; ++i) {
      h.nodes.push_back(perm[i % n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      d.add_edge(perm[i], perm[(i + 1) % n]);
    }
    Walk w{{static_cast<std::size_t>(rng() % n)}};
    for (std::size_t s = 0, len = rng() % 80; s < len; ++s) {
      auto const& succ = d.successors(w.end());
      w.nodes.push_back(succ[rng() % succ.size()]);
    }
    auto const r        = cycle_replace_detailed(d, h, w);
    auto const [lo, hi] = pumping_window(n);
    CHECK(is_walk_in(d, r.walk));
    CHECK(r.walk.start() == w.start());
    CHECK(r.walk.end() == w.end());
    CHECK(r.walk.length() >= lo);
    CHECK(r.walk.length() <= hi);
    CHECK(r.walk.length() % n == w.length() % n);
    detached += r.case_label == 'D';
  }
  CHECK(detached > 0);
}
