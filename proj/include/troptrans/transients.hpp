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

// Transients and eventual periods of max-plus power sequences, found by
// exact comparison at a fixed stride on the normalized matrix.
//
// Exponents start at 0 with A^{⊗0} = I. If row k of A^{⊗r} equals row k of
// A^{⊗(r+p)} then the row is periodic with period p from r onwards, so the
// first such r (for p an eventual period) is the transient of the row. The
// same holds for whole matrices. A single entry has no such certificate and
// is checked over the whole searched window instead.

#ifndef TROPTRANS_TRANSIENTS_HPP
#define TROPTRANS_TRANSIENTS_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "spectral.hpp"

namespace troptrans {

  enum class Scope { matrix, row, column, entry };

  inline char const* to_string(Scope s) {
    switch (s) {
      case Scope::matrix:
        return "matrix";
      case Scope::row:
        return "row";
      case Scope::column:
        return "column";
      case Scope::entry:
        return "entry";
    }
    return "unknown";
  }

  struct TransientReport {
    Scope       scope     = Scope::row;
    std::size_t index     = 0;  // row/column k, or entry row
    std::size_t column    = 0;  // entry column
    std::size_t transient = 0;
    std::size_t period    = 1;
    // largest exponent whose power was computed
    std::size_t searched_up_to = 0;
  };

  struct TransientOptions {
    std::optional<std::size_t> period;
    std::optional<std::size_t> cap;
  };

  namespace detail {
    template <typename S>
    using Row = std::vector<Weight<S>>;

    template <typename S>
    Row<S> unit_row(std::size_t n, std::size_t k) {
      Row<S> r(n);
      r[k] = Weight<S>::unit();
      return r;
    }

    /// First t <= cap - p with row_k(N^t) = row_k(N^{t+p}); empty if none.
    template <typename S>
    std::optional<std::size_t> first_row_repeat(Matrix<S> const& norm,
                                                std::size_t      k,
                                                std::size_t      p,
                                                std::size_t      cap) {
      std::size_t const n = norm.dim();
      std::deque<Row<S>> window;
      window.push_back(unit_row<S>(n, k));
      for (std::size_t t = 1; t <= cap; ++t) {
        window.push_back(vec_mat_mul(std::span<Weight<S> const>(window.back()), norm));
        if (window.size() > p + 1) {
          window.pop_front();
        }
        if (t >= p && window.front() == window.back()) {
          return t - p;
        }
      }
      return std::nullopt;
    }

    inline void check_period_cap(std::size_t p, std::size_t cap) {
      if (p == 0) {
        throw InvalidArgument("period must be positive");
      }
      if (cap == 0) {
        throw InvalidArgument("cap must be positive");
      }
    }

    template <typename S>
    TransientReport row_transient_impl(Matrix<S> const&        a,
                                       std::size_t             k,
                                       TransientOptions const& opts,
                                       Scope                   scope) {
      std::size_t const n = a.dim();
      if (k >= n) {
        throw InvalidArgument("node " + std::to_string(k) + " out of range");
      }
      auto norm = normalize(a).matrix;
      std::size_t p, cap;
      if (opts.period && opts.cap) {
        p   = *opts.period;
        cap = *opts.cap;
      } else {
        auto const cg = critical_graph(a);
        if (!cg.is_critical(k)) {
          throw InvalidArgument("node " + std::to_string(k)
                                + " is not critical: period and cap must be "
                                  "given explicitly");
        }
        p   = opts.period.value_or(cg.component_of(k).cyclicity);
        cap = opts.cap.value_or(
            static_cast<std::size_t>(main1_bounds_for(a, cg, k).min()) + p);
      }
      check_period_cap(p, cap);
      auto t = first_row_repeat(norm, k, p, cap);
      if (!t) {
        throw CapExceeded(std::string(to_string(scope)) + " "
                          + std::to_string(k) + ": no periodicity with period "
                          + std::to_string(p) + " up to exponent "
                          + std::to_string(cap));
      }
      return {scope, k, 0, *t, p, cap};
    }
  }  // namespace detail

  /// Transient of row k. For critical k the period defaults to the
  /// cyclicity of k's critical component and the cap to the smallest
  /// applicable size-based bound plus the period; other rows need both.
  template <typename S>
  TransientReport row_transient(Matrix<S> const&        a,
                                std::size_t             k,
                                TransientOptions const& opts = {}) {
    return detail::row_transient_impl(a, k, opts, Scope::row);
  }

  template <typename S>
  TransientReport column_transient(Matrix<S> const&        a,
                                   std::size_t             k,
                                   TransientOptions const& opts = {}) {
    return detail::row_transient_impl(a.transpose(), k, opts, Scope::column);
  }

  /// Transient of the single entry sequence (a^{(t)}_{ij})_t: the least T
  /// with a^{(t)} = a^{(t+p)} (normalized) for all T <= t <= cap - p.
  template <typename S>
  TransientReport entry_transient(Matrix<S> const& a,
                                  std::size_t      i,
                                  std::size_t      j,
                                  std::size_t      period,
                                  std::size_t      cap) {
    std::size_t const n = a.dim();
    if (i >= n || j >= n) {
      throw InvalidArgument("entry index out of range");
    }
    detail::check_period_cap(period, cap);
    if (cap < period) {
      throw CapExceeded("entry: cap is smaller than the period");
    }
    auto                   norm = normalize(a).matrix;
    std::vector<Weight<S>> seq;
    seq.reserve(cap + 1);
    auto row = detail::unit_row<S>(n, i);
    seq.push_back(row[j]);
    for (std::size_t t = 1; t <= cap; ++t) {
      row = vec_mat_mul(std::span<Weight<S> const>(row), norm);
      seq.push_back(row[j]);
    }
    std::size_t transient = 0;
    for (std::size_t t = cap - period + 1; t-- > 0;) {
      if (!(seq[t] == seq[t + period])) {
        transient = t + 1;
        break;
      }
    }
    if (transient > cap - period) {
      throw CapExceeded("entry (" + std::to_string(i) + ", " + std::to_string(j)
                        + "): not periodic within exponent "
                        + std::to_string(cap));
    }
    return {Scope::entry, i, j, transient, period, cap};
  }

  /// Transient of the whole power sequence of an irreducible matrix. The
  /// period defaults to the lcm of the critical component cyclicities. The
  /// transient depends on the weights, so the cap carries no guarantee.
  template <typename S>
  TransientReport matrix_transient(Matrix<S> const&           a,
                                   std::size_t                cap,
                                   std::optional<std::size_t> period = {}) {
    if (!is_irreducible(a)) {
      throw NotStronglyConnected("matrix_transient: matrix is reducible");
    }
    std::size_t const p = period.value_or(critical_graph(a).period());
    detail::check_period_cap(p, cap);
    auto                  norm = normalize(a).matrix;
    std::deque<Matrix<S>> window;
    window.push_back(Matrix<S>::identity(a.dim()));
    for (std::size_t t = 1; t <= cap; ++t) {
      window.push_back(mat_mul(window.back(), norm));
      if (window.size() > p + 1) {
        window.pop_front();
      }
      if (t >= p && window.front() == window.back()) {
        return {Scope::matrix, 0, 0, t - p, p, cap};
      }
    }
    throw CapExceeded("matrix: no periodicity with period " + std::to_string(p)
                      + " up to exponent " + std::to_string(cap));
  }

  namespace detail {
    template <typename S>
    std::size_t least_period_impl(Matrix<S> const& a, std::size_t k) {
      auto const cg = critical_graph(a);
      if (!cg.is_critical(k)) {
        throw InvalidArgument("least_eventual_period: node " + std::to_string(k)
                              + " is not critical");
      }
      std::size_t const gamma = cg.component_of(k).cyclicity;
      auto const        rep   = row_transient(a, k);
      auto              norm  = normalize(a).matrix;
      // rows T .. T + gamma
      std::vector<Row<S>> rows;
      auto                row = unit_row<S>(a.dim(), k);
      for (std::size_t t = 0; t <= rep.transient + gamma; ++t) {
        if (t >= rep.transient) {
          rows.push_back(row);
        }
        row = vec_mat_mul(std::span<Weight<S> const>(row), norm);
      }
      for (std::size_t p = 1; p < gamma; ++p) {
        if (gamma % p == 0 && rows[0] == rows[p]) {
          return p;
        }
      }
      return gamma;
    }
  }  // namespace detail

  /// Least eventual period of row k (k critical). Every eventual period is a
  /// multiple of the least one, so only divisors of the component cyclicity
  /// are candidates; each is tested at the transient.
  template <typename S>
  std::size_t least_eventual_period_row(Matrix<S> const& a, std::size_t k) {
    return detail::least_period_impl(a, k);
  }

  template <typename S>
  std::size_t least_eventual_period_column(Matrix<S> const& a, std::size_t k) {
    return detail::least_period_impl(a.transpose(), k);
  }

}  // namespace troptrans

#endif  // TROPTRANS_TRANSIENTS_HPP
