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

// Maximum cycle mean, critical graph, normalization and visualization
// scaling, plus the two Boolean projections (pattern, critical matrix).

#ifndef TROPTRANS_SPECTRAL_HPP
#define TROPTRANS_SPECTRAL_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace troptrans {

  /// Maximum over nonempty cycles of weight / length, or ⊥ when the digraph
  /// is acyclic. Karp's recurrence with a virtual source joined to every
  /// node, so no strong connectivity is needed.
  template <typename S>
  Weight<S> max_cycle_mean(Matrix<S> const& a) {
    using traits        = scalar_traits<S>;
    std::size_t const n = a.dim();
    // walks[k][v]: heaviest walk of exactly k edges ending at v
    std::vector<std::vector<Weight<S>>> walks(n + 1);
    walks[0].assign(n, Weight<S>::unit());
    for (std::size_t k = 1; k <= n; ++k) {
      walks[k] = vec_mat_mul(std::span<Weight<S> const>(walks[k - 1]), a);
    }
    Weight<S> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (walks[n][v].is_bottom()) {
        continue;
      }
      Weight<S> worst;
      bool      have = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (walks[k][v].is_bottom()) {
          continue;
        }
        S diff = walks[n][v].value() - walks[k][v].value();
        Weight<S> mean(traits::divide(diff, static_cast<std::int64_t>(n - k)));
        if (!have || less(mean, worst)) {
          worst = mean;
          have  = true;
        }
      }
      best = tadd(best, worst);
    }
    return best;
  }

  template <typename S>
  struct Normalized {
    Matrix<S> matrix;
    S         lambda;
  };

  /// Subtracts λ from every finite entry so that the result has cycle mean 0.
  template <typename S>
  Normalized<S> normalize(Matrix<S> const& a) {
    auto lam = max_cycle_mean(a);
    if (lam.is_bottom()) {
      throw AcyclicMatrix("matrix is nilpotent: its digraph has no cycle");
    }
    Matrix<S> b = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_finite()) {
          b(i, j) = Weight<S>(S(a(i, j).value() - lam.value()));
        }
      }
    }
    return {std::move(b), lam.value()};
  }

  /// A strongly connected component of the critical graph.
  struct CritComponent {
    std::vector<std::size_t> nodes;
    std::size_t              cyclicity = 0;
    std::size_t              girth     = 0;

    std::size_t size() const {
      return nodes.size();
    }
  };

  template <typename S>
  struct CriticalGraph {
    Weight<S>                  lambda;
    std::vector<std::size_t>   nodes;
    Digraph                    edges;  // all n nodes, critical edges only
    std::vector<CritComponent> components;
    std::vector<std::size_t>   component_index;  // no_node if not critical

    bool is_critical(std::size_t k) const {
      return k < component_index.size() && component_index[k] != no_node;
    }

    CritComponent const& component_of(std::size_t k) const {
      if (!is_critical(k)) {
        throw InvalidArgument("node " + std::to_string(k) + " is not critical");
      }
      return components[component_index[k]];
    }

    /// lcm of the component cyclicities.
    std::size_t period() const {
      std::size_t p = 1;
      for (auto const& c : components) {
        p = std::lcm(p, c.cyclicity);
      }
      return p;
    }
  };

  /// Critical edges are the (i, j) with a_ij + star_ji = 0 in the normalized
  /// matrix, i.e. the edges lying on a cycle of mean λ.
  template <typename S>
  CriticalGraph<S> critical_graph(Matrix<S> const& a) {
    auto [norm, lam]     = normalize(a);
    auto const        st = kleene_star(norm);
    std::size_t const n  = a.dim();

    CriticalGraph<S> cg;
    cg.lambda = Weight<S>(lam);
    cg.edges  = Digraph(n);
    auto zero = Weight<S>::unit();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (norm(i, j).is_finite() && tmul(norm(i, j), st(j, i)) == zero) {
          cg.edges.add_edge(i, j);
        }
      }
    }
    cg.component_index.assign(n, no_node);
    for (auto& comp : strongly_connected_components(cg.edges)) {
      auto sub = induced_subgraph(cg.edges, comp);
      if (sub.edge_count() == 0) {
        continue;
      }
      CritComponent c;
      c.nodes     = std::move(comp);
      c.cyclicity = cyclicity(sub);
      c.girth     = girth(sub);
      for (auto v : c.nodes) {
        cg.component_index[v] = cg.components.size();
        cg.nodes.push_back(v);
      }
      cg.components.push_back(std::move(c));
    }
    std::sort(cg.nodes.begin(), cg.nodes.end());
    return cg;
  }

  template <typename S>
  struct Visualized {
    Matrix<S>              matrix;   // normalized and scaled
    std::vector<Weight<S>> scaling;  // x with b_ij = a_ij - λ - x_i + x_j
    S                      lambda;
  };

  /// Strict visualization: all entries <= 0 and entry = 0 exactly on
  /// critical edges. The scaling vector is the arithmetic mean of the Kleene
  /// star columns. For reducible input the star is taken of the normalized
  /// matrix with ⊥ replaced by a value low enough that no new cycle reaches
  /// mean 0, so every column is finite.
  template <typename S>
  Visualized<S> visualize(Matrix<S> const& a) {
    using traits         = scalar_traits<S>;
    auto [norm, lam]     = normalize(a);
    std::size_t const n  = a.dim();

    S top = traits::from_int(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (norm(i, j).is_finite() && top < norm(i, j).value()) {
          top = norm(i, j).value();
        }
      }
    }
    S         floor_value = S(traits::from_int(-1) - top * traits::from_int(static_cast<std::int64_t>(n)));
    Matrix<S> completed   = norm;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (completed(i, j).is_bottom()) {
          completed(i, j) = Weight<S>(floor_value);
        }
      }
    }
    auto const             st = kleene_star(completed);
    std::vector<Weight<S>> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      S sum = traits::from_int(0);
      for (std::size_t c = 0; c < n; ++c) {
        sum += st(i, c).value();
      }
      x[i] = Weight<S>(traits::divide(sum, static_cast<std::int64_t>(n)));
    }
    Matrix<S> b = scale_diag(norm, x);

    auto const cg   = critical_graph(a);
    auto const zero = Weight<S>::unit();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j).is_bottom()) {
          continue;
        }
        bool const is_zero = b(i, j) == zero;
        if (less(zero, b(i, j)) || is_zero != cg.edges.has_edge(i, j)) {
          throw InternalError("visualize: scaled matrix is not strictly "
                              "visualized at entry ("
                              + std::to_string(i) + ", " + std::to_string(j)
                              + ")");
        }
      }
    }
    return {std::move(b), std::move(x), lam};
  }

  /// True if all entries are <= 0 and the zero entries are exactly the
  /// critical edges.
  template <typename S>
  bool is_strictly_visualized(Matrix<S> const& a) {
    auto const lam = max_cycle_mean(a);
    auto const zero = Weight<S>::unit();
    if (lam.is_bottom() || !(lam == zero)) {
      return false;
    }
    auto const cg = critical_graph(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_bottom()) {
          continue;
        }
        if (less(zero, a(i, j))
            || (a(i, j) == zero) != cg.edges.has_edge(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  /// 0 on critical edges, ⊥ elsewhere.
  template <typename S>
  Matrix<S> critical_matrix(Matrix<S> const& a) {
    auto const  cg = critical_graph(a);
    std::size_t n  = a.dim();
    Matrix<S>   c(n);
    for (auto [i, j] : cg.edges.edges()) {
      c(i, j) = Weight<S>::unit();
    }
    return c;
  }

  /// Boolean matrix with the support of a: finite entries become 0.
  template <typename S>
  Matrix<S> pattern(Matrix<S> const& a) {
    Matrix<S> p(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_finite()) {
          p(i, j) = Weight<S>::unit();
        }
      }
    }
    return p;
  }

}  // namespace troptrans

#endif  // TROPTRANS_SPECTRAL_HPP
