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

// Walk surgery against a Hamiltonian cycle: any walk W in an n-node digraph
// with a Hamiltonian cycle C can be turned into a walk V with the same ends,
// length in [(n-1)^2 + 1, (n-1)^2 + n] and ℓ(V) ≡ ℓ(W) (mod n), using only
// removal of cycles of W and insertion of copies of C.

#ifndef TROPTRANS_PUMPING_HPP
#define TROPTRANS_PUMPING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"

namespace troptrans {

  /// Nonempty set of indices I among the first n entries with
  /// Σ_{i∈I} xs[i] ≡ 0 (mod n). Pigeonhole on prefix sums, so I is a
  /// contiguous run. Indices are 0-based and increasing.
  inline std::vector<std::size_t>
  zero_mod_subset(std::span<std::int64_t const> xs, std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("zero_mod_subset: modulus must be positive");
    }
    if (xs.size() < n) {
      throw InvalidArgument("zero_mod_subset: need at least n = "
                            + std::to_string(n) + " integers, got "
                            + std::to_string(xs.size()));
    }
    auto const               m = static_cast<std::int64_t>(n);
    std::vector<std::size_t> seen(n, no_node);  // residue -> prefix length
    seen[0]                    = 0;
    std::int64_t residue       = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      residue = ((residue + xs[k - 1]) % m + m) % m;
      auto& first = seen[static_cast<std::size_t>(residue)];
      if (first != no_node) {
        std::vector<std::size_t> out;
        for (std::size_t i = first; i < k; ++i) {
          out.push_back(i);
        }
        return out;
      }
      first = k;
    }
    throw InternalError("zero_mod_subset: pigeonhole failed");
  }

  inline std::vector<std::size_t>
  zero_mod_subset(std::vector<std::int64_t> const& xs, std::size_t n) {
    return zero_mod_subset(std::span<std::int64_t const>(xs), n);
  }

  struct WalkDecomposition {
    Walk              path;    // simple path, or a single node
    std::vector<Walk> cycles;  // in removal order
  };

  /// Repeatedly cuts out the leftmost closed sub-walk between two
  /// occurrences of a node. What remains is a path; it is a single node when
  /// W is closed.
  inline WalkDecomposition decompose_walk(Digraph const& d, Walk const& w) {
    if (!is_walk_in(d, w)) {
      throw InvalidArgument("decompose_walk: walk is not valid in the digraph");
    }
    WalkDecomposition        out;
    std::vector<std::size_t> pos(d.node_count(), no_node);
    auto&                    path = out.path.nodes;
    for (auto v : w.nodes) {
      if (pos[v] == no_node) {
        pos[v] = path.size();
        path.push_back(v);
        continue;
      }
      std::size_t const at = pos[v];
      Walk              cycle;
      cycle.nodes.assign(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
      cycle.nodes.push_back(v);
      for (std::size_t i = at + 1; i < path.size(); ++i) {
        pos[path[i]] = no_node;
      }
      path.resize(at + 1);
      out.cycles.push_back(std::move(cycle));
    }
    return out;
  }

  /// Splices `cycle` into `walk` at the first node of `walk` that lies on
  /// the cycle. Returns false if they share no node.
  inline bool insert_cycle(Walk& walk, Walk const& cycle) {
    std::vector<std::size_t> const body(cycle.nodes.begin(), cycle.nodes.end() - 1);
    for (std::size_t i = 0; i < walk.nodes.size(); ++i) {
      auto it = std::find(body.begin(), body.end(), walk.nodes[i]);
      if (it == body.end()) {
        continue;
      }
      std::vector<std::size_t> rotated;
      auto const               offset = static_cast<std::size_t>(it - body.begin());
      for (std::size_t s = 1; s <= body.size(); ++s) {
        rotated.push_back(body[(offset + s) % body.size()]);
      }
      walk.nodes.insert(walk.nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        rotated.begin(), rotated.end());
      return true;
    }
    return false;
  }

  /// Inverse of decompose_walk: inserts the cycles back in reverse removal
  /// order.
  inline Walk reassemble(WalkDecomposition const& dec) {
    Walk w = dec.path;
    for (auto it = dec.cycles.rbegin(); it != dec.cycles.rend(); ++it) {
      if (!insert_cycle(w, *it)) {
        throw InternalError("reassemble: cycle has no anchor in the walk");
      }
    }
    return w;
  }

  /// Removes sets of cycles whose total length is a multiple of n until at
  /// most n - 1 cycles remain, none of length ≡ 0 (mod n).
  inline std::vector<Walk> reduce_cycles(std::vector<Walk> cycles, std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("reduce_cycles: n must be positive");
    }
    std::erase_if(cycles, [n](Walk const& c) { return c.length() % n == 0; });
    while (cycles.size() >= n) {
      std::vector<std::int64_t> lengths;
      for (std::size_t i = 0; i < n; ++i) {
        lengths.push_back(static_cast<std::int64_t>(cycles[i].length()));
      }
      auto idx = zero_mod_subset(lengths, n);
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(*it));
      }
    }
    return cycles;
  }

  inline bool is_hamiltonian_cycle(Digraph const& d, Walk const& c) {
    return c.is_cycle() && c.length() == d.node_count() && is_walk_in(d, c);
  }

  struct PumpResult {
    Walk walk;
    // 'C': every kept cycle meets the path; 'D': the Hamiltonian cycle was
    // inserted first; '=': the input already had an admissible length
    char        case_label      = '=';
    std::size_t padding_copies  = 0;
  };

  /// Lower and upper end of the admissible length window for n nodes.
  inline std::pair<std::size_t, std::size_t> pumping_window(std::size_t n) {
    return {(n - 1) * (n - 1) + 1, (n - 1) * (n - 1) + n};
  }

  inline PumpResult cycle_replace_detailed(Digraph const& d,
                                           Walk const&    hamiltonian,
                                           Walk const&    w) {
    std::size_t const n = d.node_count();
    if (!is_hamiltonian_cycle(d, hamiltonian)) {
      throw InvalidArgument("cycle_replace: not a Hamiltonian cycle of the "
                            "digraph");
    }
    if (!is_walk_in(d, w)) {
      throw InvalidArgument("cycle_replace: walk is not valid in the digraph");
    }
    auto const [lo, hi] = pumping_window(n);
    if (w.length() >= lo && w.length() <= hi) {
      return {w, '=', 0};
    }
    auto dec  = decompose_walk(d, w);
    auto kept = reduce_cycles(std::move(dec.cycles), n);

    auto meets_path = [&](Walk const& c) {
      return std::any_of(c.nodes.begin(), c.nodes.end(), [&](std::size_t v) {
        return std::find(dec.path.nodes.begin(), dec.path.nodes.end(), v)
               != dec.path.nodes.end();
      });
    };
    PumpResult out;
    out.walk = dec.path;
    if (std::all_of(kept.begin(), kept.end(), meets_path)) {
      out.case_label = 'C';
    } else {
      out.case_label = 'D';
      insert_cycle(out.walk, hamiltonian);
    }
    for (auto const& c : kept) {
      if (!insert_cycle(out.walk, c)) {
        throw InternalError("cycle_replace: kept cycle has no anchor");
      }
    }
    while (out.walk.length() < lo) {
      insert_cycle(out.walk, hamiltonian);
      ++out.padding_copies;
    }
    if (out.walk.length() > hi || out.walk.length() % n != w.length() % n
        || out.walk.start() != w.start() || out.walk.end() != w.end()) {
      throw InternalError("cycle_replace: result violates its postcondition");
    }
    return out;
  }

  /// See cycle_replace_detailed.
  inline Walk cycle_replace(Digraph const& d,
                            Walk const&    hamiltonian,
                            Walk const&    w) {
    return cycle_replace_detailed(d, hamiltonian, w).walk;
  }

}  // namespace troptrans

#endif  // TROPTRANS_PUMPING_HPP
