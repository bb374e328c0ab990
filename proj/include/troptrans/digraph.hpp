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

// Unweighted digraph structure: strong connectivity, cyclicity, cyclicity
// classes, girth and digraph powers. Nodes are 0-based.

#ifndef TROPTRANS_DIGRAPH_HPP
#define TROPTRANS_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace troptrans {

  inline constexpr std::size_t no_node = std::numeric_limits<std::size_t>::max();

  class Digraph {
   public:
    using edge_type = std::pair<std::size_t, std::size_t>;

    Digraph() = default;
    explicit Digraph(std::size_t n) : _n(n), _adj(n * n, 0), _succ(n) {}
    Digraph(std::size_t n, std::initializer_list<edge_type> edges)
        : Digraph(n) {
      for (auto [i, j] : edges) {
        add_edge(i, j);
      }
    }

    std::size_t node_count() const noexcept {
      return _n;
    }

    void add_edge(std::size_t i, std::size_t j) {
      check_node(i);
      check_node(j);
      if (_adj[i * _n + j]) {
        return;
      }
      _adj[i * _n + j] = 1;
      auto& s          = _succ[i];
      s.insert(std::upper_bound(s.begin(), s.end(), j), j);
      ++_m;
    }

    bool has_edge(std::size_t i, std::size_t j) const {
      return i < _n && j < _n && _adj[i * _n + j] != 0;
    }

    std::vector<std::size_t> const& successors(std::size_t i) const {
      return _succ[i];
    }

    std::size_t edge_count() const noexcept {
      return _m;
    }

    /// Edges in lexicographic order.
    std::vector<edge_type> edges() const {
      std::vector<edge_type> out;
      out.reserve(_m);
      for (std::size_t i = 0; i < _n; ++i) {
        for (auto j : _succ[i]) {
          out.emplace_back(i, j);
        }
      }
      return out;
    }

    Digraph reversed() const {
      Digraph r(_n);
      for (auto [i, j] : edges()) {
        r.add_edge(j, i);
      }
      return r;
    }

    friend bool operator==(Digraph const& a, Digraph const& b) {
      return a._n == b._n && a._adj == b._adj;
    }

   private:
    void check_node(std::size_t i) const {
      if (i >= _n) {
        throw InvalidArgument("node " + std::to_string(i) + " out of range");
      }
    }

    std::size_t                           _n = 0;
    std::size_t                           _m = 0;
    std::vector<char>                     _adj;
    std::vector<std::vector<std::size_t>> _succ;
  };

  /// Node sequence (i_0, ..., i_t). A single node is the empty walk.
  struct Walk {
    std::vector<std::size_t> nodes;

    std::size_t length() const {
      return nodes.empty() ? 0 : nodes.size() - 1;
    }
    std::size_t start() const {
      return nodes.front();
    }
    std::size_t end() const {
      return nodes.back();
    }
    bool is_closed() const {
      return !nodes.empty() && nodes.front() == nodes.back();
    }
    /// Closed, nonempty, and no node repeated except start = end.
    bool is_cycle() const {
      if (!is_closed() || length() == 0) {
        return false;
      }
      std::vector<std::size_t> inner(nodes.begin(), nodes.end() - 1);
      std::sort(inner.begin(), inner.end());
      return std::adjacent_find(inner.begin(), inner.end()) == inner.end();
    }
    bool is_path() const {
      std::vector<std::size_t> all(nodes);
      std::sort(all.begin(), all.end());
      return std::adjacent_find(all.begin(), all.end()) == all.end();
    }

    friend bool operator==(Walk const&, Walk const&) = default;
  };

  inline bool is_walk_in(Digraph const& d, Walk const& w) {
    if (w.nodes.empty()) {
      return false;
    }
    for (auto v : w.nodes) {
      if (v >= d.node_count()) {
        return false;
      }
    }
    for (std::size_t i = 0; i + 1 < w.nodes.size(); ++i) {
      if (!d.has_edge(w.nodes[i], w.nodes[i + 1])) {
        return false;
      }
    }
    return true;
  }

  /// Total weight of a walk in the weighted digraph of a.
  template <typename S>
  Weight<S> walk_weight(Matrix<S> const& a, Walk const& w) {
    Weight<S> total = Weight<S>::unit();
    for (std::size_t i = 0; i + 1 < w.nodes.size(); ++i) {
      total = tmul(total, a(w.nodes[i], w.nodes[i + 1]));
    }
    return total;
  }

  /// Edge (i, j) iff a_ij is finite.
  template <typename S>
  Digraph digraph_of(Matrix<S> const& a) {
    std::size_t const n = a.dim();
    Digraph           d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j).is_finite()) {
          d.add_edge(i, j);
        }
      }
    }
    return d;
  }

  /// Tarjan's algorithm (iterative). Every component is sorted and the
  /// components are ordered by their smallest node.
  inline std::vector<std::vector<std::size_t>>
  strongly_connected_components(Digraph const& d) {
    std::size_t const        n = d.node_count();
    std::vector<std::size_t> index(n, no_node), low(n, 0);
    std::vector<char>        on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    std::size_t                           counter = 0;

    // (node, position in successor list)
    std::vector<std::pair<std::size_t, std::size_t>> call;
    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != no_node) {
        continue;
      }
      call.emplace_back(root, 0);
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        auto& [v, pos]   = call.back();
        auto const& succ = d.successors(v);
        if (pos < succ.size()) {
          std::size_t w = succ[pos++];
          if (index[w] == no_node) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            call.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        std::size_t const done = v;
        call.pop_back();
        if (!call.empty()) {
          std::size_t parent = call.back().first;
          low[parent]        = std::min(low[parent], low[done]);
        }
        if (low[done] == index[done]) {
          std::vector<std::size_t> comp;
          std::size_t              w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
          } while (w != done);
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
      }
    }
    std::sort(comps.begin(), comps.end(), [](auto const& x, auto const& y) {
      return x.front() < y.front();
    });
    return comps;
  }

  inline bool is_strongly_connected(Digraph const& d) {
    return d.node_count() > 0 && strongly_connected_components(d).size() == 1;
  }

  template <typename S>
  bool is_irreducible(Matrix<S> const& a) {
    return is_strongly_connected(digraph_of(a));
  }

  /// Subgraph induced on `nodes`; node k of the result is nodes[k].
  inline Digraph induced_subgraph(Digraph const&                 d,
                                  std::vector<std::size_t> const& nodes) {
    std::vector<std::size_t> pos(d.node_count(), no_node);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      pos[nodes[k]] = k;
    }
    Digraph sub(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (auto j : d.successors(nodes[k])) {
        if (pos[j] != no_node) {
          sub.add_edge(k, pos[j]);
        }
      }
    }
    return sub;
  }

  /// Unweighted distances from src; no_node where unreachable.
  inline std::vector<std::size_t> bfs_distances(Digraph const& d,
                                                std::size_t    src) {
    std::vector<std::size_t> dist(d.node_count(), no_node);
    std::queue<std::size_t>  q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : d.successors(v)) {
        if (dist[w] == no_node) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    return dist;
  }

  /// Length of a shortest nonempty closed walk through v (a cycle), if any.
  inline std::optional<std::size_t> shortest_cycle_through(Digraph const& d,
                                                           std::size_t    v) {
    auto                       dist = bfs_distances(d, v);
    std::optional<std::size_t> best;
    for (std::size_t u = 0; u < d.node_count(); ++u) {
      if (dist[u] != no_node && d.has_edge(u, v)) {
        std::size_t len = dist[u] + 1;
        if (!best || len < *best) {
          best = len;
        }
      }
    }
    return best;
  }

  namespace detail {
    inline void require_cyclic_strong(Digraph const& d, char const* what) {
      if (!is_strongly_connected(d)) {
        throw NotStronglyConnected(std::string(what)
                                   + ": digraph is not strongly connected");
      }
      if (d.edge_count() == 0) {
        throw InvalidArgument(std::string(what) + ": digraph has no edges");
      }
    }
  }  // namespace detail

  /// gcd of all cycle lengths, via gcd of dist(u) + 1 - dist(v) over edges.
  inline std::size_t cyclicity(Digraph const& d) {
    detail::require_cyclic_strong(d, "cyclicity");
    auto        dist = bfs_distances(d, 0);
    std::size_t g    = 0;
    for (auto [u, v] : d.edges()) {
      auto a = static_cast<long long>(dist[u]) + 1;
      auto b = static_cast<long long>(dist[v]);
      g      = std::gcd(g, static_cast<std::size_t>(a > b ? a - b : b - a));
    }
    return g;
  }

  /// The d cyclicity classes. Class 0 holds node 0 and every edge leads from
  /// class s to class (s + 1) mod d.
  inline std::vector<std::vector<std::size_t>>
  cyclicity_classes(Digraph const& d) {
    std::size_t const                     c    = cyclicity(d);
    auto                                  dist = bfs_distances(d, 0);
    std::vector<std::vector<std::size_t>> classes(c);
    for (std::size_t v = 0; v < d.node_count(); ++v) {
      classes[dist[v] % c].push_back(v);
    }
    return classes;
  }

  /// Smallest length of a nonempty cycle.
  inline std::size_t girth(Digraph const& d) {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < d.node_count(); ++v) {
      auto c = shortest_cycle_through(d, v);
      if (c && (!best || *c < *best)) {
        best = c;
      }
    }
    if (!best) {
      throw InvalidArgument("girth: digraph is acyclic");
    }
    return *best;
  }

  namespace detail {
    inline Digraph boolean_product(Digraph const& a, Digraph const& b) {
      std::size_t const n = a.node_count();
      Digraph           c(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (auto k : a.successors(i)) {
          for (auto j : b.successors(k)) {
            c.add_edge(i, j);
          }
        }
      }
      return c;
    }
  }  // namespace detail

  /// Edge (i, j) iff there is a walk of length exactly k from i to j.
  inline Digraph graph_power(Digraph const& d, std::size_t k) {
    if (k == 0) {
      throw InvalidArgument("graph_power: exponent must be positive");
    }
    Digraph result;
    bool    have = false;
    Digraph base = d;
    while (k > 0) {
      if (k & 1U) {
        result = have ? detail::boolean_product(result, base) : base;
        have   = true;
      }
      k >>= 1U;
      if (k > 0) {
        base = detail::boolean_product(base, base);
      }
    }
    return result;
  }

}  // namespace troptrans

#endif  // TROPTRANS_DIGRAPH_HPP
