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

// Closed-form transient bounds for critical rows and columns.
//
// Size-based bounds (n = dimension, d = cyclicity of the whole digraph,
// H = critical component of k):
//
//   Wielandt            W(n)
//   Dulmage-Mendelsohn  (n - 2) g(H) + |H|
//   Schwarz             d W(n / d) + n mod d
//   Kim                 (n / d - 2) g(H) + min(n, |H| + n mod d)
//
// Rank-based bounds use the width r of a factorization A = V ⊗ Wᵀ and the
// parameter h = min(|H|, |H'|) of the related component H' in the r x r
// matrix B = Wᵀ ⊗ V; they read as above with n replaced by r, |H| by h, and
// an extra + 1. The first two bounds of each family hold for reducible
// matrices too; Schwarz and Kim need irreducibility.

#ifndef TROPTRANS_BOUNDS_HPP
#define TROPTRANS_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "spectral.hpp"

namespace troptrans {

  using bound_type = std::int64_t;

  /// 0 if k = 1, else (k - 1)^2 + 1.
  inline bound_type wielandt_number(bound_type k) {
    if (k < 1) {
      throw InvalidArgument("wielandt_number: argument must be >= 1");
    }
    return k == 1 ? 0 : (k - 1) * (k - 1) + 1;
  }

  inline bound_type wielandt_bound(bound_type n) {
    return wielandt_number(n);
  }

  inline bound_type dulmage_mendelsohn_bound(bound_type n,
                                             bound_type girth,
                                             bound_type size) {
    return (n - 2) * girth + size;
  }

  inline bound_type schwarz_bound(bound_type n, bound_type d) {
    return d * wielandt_number(n / d) + n % d;
  }

  inline bound_type kim_bound(bound_type n,
                              bound_type d,
                              bound_type girth,
                              bound_type size) {
    return (n / d - 2) * girth + std::min(n, size + n % d);
  }

  struct FourBounds {
    bound_type wielandt;
    bound_type dulmage_mendelsohn;
    bound_type schwarz;
    bound_type kim;

    bound_type min() const {
      return std::min({wielandt, dulmage_mendelsohn, schwarz, kim});
    }
    friend bool operator==(FourBounds const&, FourBounds const&) = default;
  };

  namespace detail {
    inline void check_bound_params(bound_type  n,
                                   bound_type  d,
                                   bound_type  girth,
                                   bound_type  size,
                                   char const* what) {
      auto fail = [&](char const* why) {
        throw InvalidArgument(std::string(what) + ": " + why);
      };
      if (n < 1) {
        fail("dimension must be >= 1");
      }
      if (d < 1 || d > n) {
        fail("cyclicity must lie in [1, n]");
      }
      if (girth < 1 || girth > size || size > n) {
        fail("need 1 <= g(H) <= |H| <= n");
      }
      if (girth % d != 0) {
        fail("cyclicity must divide the girth");
      }
    }
  }  // namespace detail

  /// The four size-based bounds, exactly as the formulas read.
  inline FourBounds bounds_main1(bound_type n,
                                 bound_type d,
                                 bound_type girth,
                                 bound_type size) {
    detail::check_bound_params(n, d, girth, size, "bounds_main1");
    return {wielandt_bound(n),
            dulmage_mendelsohn_bound(n, girth, size),
            schwarz_bound(n, d),
            kim_bound(n, d, girth, size)};
  }

  /// The four rank-based bounds for factorization width r.
  inline FourBounds bounds_main2(bound_type r,
                                 bound_type d,
                                 bound_type girth,
                                 bound_type h) {
    detail::check_bound_params(r, d, girth, std::max(girth, h), "bounds_main2");
    if (h < 1 || h > r) {
      throw InvalidArgument("bounds_main2: need 1 <= h <= r");
    }
    return {wielandt_number(r) + 1,
            dulmage_mendelsohn_bound(r, girth, h) + 1,
            schwarz_bound(r, d) + 1,
            kim_bound(r, d, girth, h) + 1};
  }

  /// Bounds for one critical node; schwarz and kim are empty when the
  /// matrix is reducible.
  struct NodeBounds {
    std::size_t               node = 0;
    bound_type                wielandt = 0;
    bound_type                dulmage_mendelsohn = 0;
    std::optional<bound_type> schwarz;
    std::optional<bound_type> kim;
    // rank family only
    std::optional<bound_type> h;

    bound_type min() const {
      bound_type m = std::min(wielandt, dulmage_mendelsohn);
      if (schwarz) {
        m = std::min(m, *schwarz);
      }
      if (kim) {
        m = std::min(m, *kim);
      }
      return m;
    }

    /// All applicable values, in the order W, DM, Schwarz, Kim.
    std::vector<std::pair<char const*, bound_type>> applicable() const {
      std::vector<std::pair<char const*, bound_type>> out{
          {"wielandt", wielandt}, {"dulmage_mendelsohn", dulmage_mendelsohn}};
      if (schwarz) {
        out.emplace_back("schwarz", *schwarz);
      }
      if (kim) {
        out.emplace_back("kim", *kim);
      }
      return out;
    }
  };

  /// Size-based bounds for critical node k given the critical graph.
  template <typename S>
  NodeBounds main1_bounds_for(Matrix<S> const&        a,
                              CriticalGraph<S> const& cg,
                              std::size_t             k) {
    auto const&      comp = cg.component_of(k);
    bound_type const n    = static_cast<bound_type>(a.dim());
    bound_type const g    = static_cast<bound_type>(comp.girth);
    bound_type const sz   = static_cast<bound_type>(comp.size());
    NodeBounds       nb;
    nb.node               = k;
    nb.wielandt           = wielandt_bound(n);
    nb.dulmage_mendelsohn = dulmage_mendelsohn_bound(n, g, sz);
    auto const d          = digraph_of(a);
    if (is_strongly_connected(d)) {
      auto full = bounds_main1(n, static_cast<bound_type>(cyclicity(d)), g, sz);
      nb.schwarz = full.schwarz;
      nb.kim     = full.kim;
    }
    return nb;
  }

  /// Size-based bounds for every critical node, in node order.
  template <typename S>
  std::vector<NodeBounds> main1_bounds(Matrix<S> const& a) {
    auto const              cg = critical_graph(a);
    std::vector<NodeBounds> out;
    for (auto k : cg.nodes) {
      out.push_back(main1_bounds_for(a, cg, k));
    }
    return out;
  }

  /// A = ⊕_α v_α ⊗ w_αᵀ; the columns of V and W are the v_α and w_α.
  template <typename S>
  struct Factorization {
    Matrix<S> V;
    Matrix<S> W;

    std::size_t width() const {
      return V.cols();
    }
  };

  enum class FactorizationIssue {
    none,
    dimension_mismatch,
    zero_vector,
    reconstruction_mismatch
  };

  inline char const* to_string(FactorizationIssue issue) {
    switch (issue) {
      case FactorizationIssue::none:
        return "none";
      case FactorizationIssue::dimension_mismatch:
        return "dimension_mismatch";
      case FactorizationIssue::zero_vector:
        return "zero_vector";
      case FactorizationIssue::reconstruction_mismatch:
        return "reconstruction_mismatch";
    }
    return "unknown";
  }

  struct FactorizationCheck {
    FactorizationIssue issue = FactorizationIssue::none;
    std::string        detail;

    bool valid() const {
      return issue == FactorizationIssue::none;
    }
    explicit operator bool() const {
      return valid();
    }
  };

  template <typename S>
  Matrix<S> factorization_product(Factorization<S> const& f) {
    return mat_mul(f.V, f.W.transpose());
  }

  template <typename S>
  FactorizationCheck validate_factorization(Matrix<S> const&        a,
                                            Factorization<S> const& f) {
    std::size_t const n = a.dim();
    if (f.V.rows() != n || f.W.rows() != n || f.V.cols() != f.W.cols()
        || f.V.cols() == 0) {
      return {FactorizationIssue::dimension_mismatch,
              "V and W must both be n x r with r >= 1"};
    }
    for (std::size_t alpha = 0; alpha < f.width(); ++alpha) {
      bool v_zero = true, w_zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        v_zero = v_zero && f.V(i, alpha).is_bottom();
        w_zero = w_zero && f.W(i, alpha).is_bottom();
      }
      if (v_zero || w_zero) {
        return {FactorizationIssue::zero_vector,
                std::string(v_zero ? "V" : "W") + " column "
                    + std::to_string(alpha) + " is all ⊥"};
      }
    }
    auto const prod = factorization_product(f);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(prod(i, j) == a(i, j))) {
          return {FactorizationIssue::reconstruction_mismatch,
                  "entry (" + std::to_string(i) + ", " + std::to_string(j)
                      + ") is " + prod(i, j).to_string() + ", expected "
                      + a(i, j).to_string()};
        }
      }
    }
    return {};
  }

  namespace detail {
    template <typename S>
    void require_valid_shape(Factorization<S> const& f) {
      if (f.V.rows() != f.W.rows() || f.V.cols() != f.W.cols()
          || f.V.cols() == 0) {
        throw InvalidArgument("factorization: V and W must both be n x r");
      }
    }
  }  // namespace detail

  /// The bipartite (n + r) x (n + r) matrix [[⊥, V], [Wᵀ, ⊥]]. Its square is
  /// block-diag(A, B).
  template <typename S>
  Matrix<S> build_Z(Factorization<S> const& f) {
    detail::require_valid_shape(f);
    std::size_t const n = f.V.rows(), r = f.width();
    Matrix<S>         z(n + r);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t alpha = 0; alpha < r; ++alpha) {
        z(i, n + alpha) = f.V(i, alpha);
        z(n + alpha, i) = f.W(i, alpha);
      }
    }
    return z;
  }

  /// b_{αβ} = ⊕_i w_{α,i} ⊗ v_{β,i}.
  template <typename S>
  Matrix<S> build_B(Factorization<S> const& f) {
    detail::require_valid_shape(f);
    std::size_t const n = f.V.rows(), r = f.width();
    Matrix<S>         b(r);
    for (std::size_t alpha = 0; alpha < r; ++alpha) {
      for (std::size_t beta = 0; beta < r; ++beta) {
        for (std::size_t i = 0; i < n; ++i) {
          tadd_assign(b(alpha, beta), tmul(f.W(i, alpha), f.V(i, beta)));
        }
      }
    }
    return b;
  }

  struct HParam {
    std::size_t h           = 0;
    std::size_t size_h      = 0;  // |H|
    std::size_t size_h_prime = 0;  // |H'|
    std::size_t girth       = 0;  // g(H) = g(H')
  };

  namespace detail {
    template <typename S>
    struct RankContext {
      CriticalGraph<S> crit_a;
      CriticalGraph<S> crit_b;
      CriticalGraph<S> crit_z;
    };

    template <typename S>
    HParam h_param(RankContext<S> const& ctx, std::size_t n, std::size_t k) {
      if (!ctx.crit_a.is_critical(k)) {
        throw InvalidArgument("h_param: node " + std::to_string(k)
                              + " is not critical");
      }
      if (!ctx.crit_z.is_critical(k)) {
        throw InternalError("h_param: critical node " + std::to_string(k)
                            + " is not critical in Z");
      }
      // A component G of C(Z) splits under squaring along the bipartition:
      // G ∩ {0..n-1} is H and G ∩ {n..n+r-1} is the related H'.
      auto const&              g = ctx.crit_z.component_of(k);
      std::vector<std::size_t> side_a, side_b;
      for (auto v : g.nodes) {
        if (v < n) {
          side_a.push_back(v);
        } else {
          side_b.push_back(v - n);
        }
      }
      auto const& h = ctx.crit_a.component_of(k);
      if (side_a != h.nodes || side_b.empty()) {
        throw InternalError("h_param: component of C(Z) through node "
                            + std::to_string(k)
                            + " does not restrict to its component of C(A)");
      }
      auto const& h_prime = ctx.crit_b.component_of(side_b.front());
      if (side_b != h_prime.nodes) {
        throw InternalError("h_param: related component of C(B) mismatch");
      }
      if (h.girth != h_prime.girth) {
        throw GirthMismatch("h_param: g(H) = " + std::to_string(h.girth)
                            + " but g(H') = " + std::to_string(h_prime.girth));
      }
      return {std::min(h.size(), h_prime.size()),
              h.size(),
              h_prime.size(),
              h.girth};
    }
  }  // namespace detail

  /// h = min(|H|, |H'|) for the critical component H of k and its related
  /// component H' of C(B); verifies g(H) = g(H').
  template <typename S>
  HParam h_param(Matrix<S> const&        a,
                 Factorization<S> const& f,
                 std::size_t             k) {
    detail::require_valid_shape(f);
    detail::RankContext<S> ctx{
        critical_graph(a), critical_graph(build_B(f)), critical_graph(build_Z(f))};
    return detail::h_param(ctx, a.dim(), k);
  }

  /// Rank-based bounds for every critical node of a. The factorization must
  /// validate; its width stands in for the factor rank.
  template <typename S>
  std::vector<NodeBounds> main2_bounds(Matrix<S> const&        a,
                                       Factorization<S> const& f) {
    auto check = validate_factorization(a, f);
    if (!check) {
      throw InvalidArgument(std::string("invalid factorization (")
                            + to_string(check.issue) + "): " + check.detail);
    }
    auto const             b = build_B(f);
    detail::RankContext<S> ctx{critical_graph(a), critical_graph(b),
                               critical_graph(build_Z(f))};
    bound_type const       r  = static_cast<bound_type>(f.width());
    auto const             da = digraph_of(a);
    std::optional<bound_type> d;
    if (is_strongly_connected(da)) {
      auto db = digraph_of(b);
      if (!is_strongly_connected(db) || cyclicity(db) != cyclicity(da)) {
        throw InternalError("main2_bounds: B is not irreducible with the "
                            "cyclicity of A");
      }
      d = static_cast<bound_type>(cyclicity(da));
    }
    std::vector<NodeBounds> out;
    for (auto k : ctx.crit_a.nodes) {
      auto const hp = detail::h_param(ctx, a.dim(), k);
      auto const g  = static_cast<bound_type>(hp.girth);
      auto const h  = static_cast<bound_type>(hp.h);
      NodeBounds nb;
      nb.node               = k;
      nb.h                  = h;
      nb.wielandt           = wielandt_number(r) + 1;
      nb.dulmage_mendelsohn = dulmage_mendelsohn_bound(r, g, h) + 1;
      if (d) {
        auto full  = bounds_main2(r, *d, g, h);
        nb.schwarz = full.schwarz;
        nb.kim     = full.kim;
      }
      out.push_back(nb);
    }
    return out;
  }

}  // namespace troptrans

#endif  // TROPTRANS_BOUNDS_HPP
