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

// Dense max-plus matrices. Entry (i, j) of the t-th power is the maximum
// weight of a walk of length t from i to j, or ⊥ if there is none.

#ifndef TROPTRANS_MATRIX_HPP
#define TROPTRANS_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "weight.hpp"

namespace troptrans {

  template <typename S>
  class Matrix {
   public:
    using scalar_type = S;
    using weight_type = Weight<S>;

    Matrix() = default;

    /// rows x cols matrix filled with ⊥.
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    /// Square n x n matrix filled with ⊥.
    explicit Matrix(std::size_t n) : Matrix(n, n) {}

    Matrix(std::initializer_list<std::initializer_list<weight_type>> init)
        : _rows(init.size()), _cols(init.size() == 0 ? 0 : init.begin()->size()) {
      _data.reserve(_rows * _cols);
      for (auto const& row : init) {
        if (row.size() != _cols) {
          throw DimensionError("ragged matrix initializer");
        }
        _data.insert(_data.end(), row.begin(), row.end());
      }
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = weight_type::unit();
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }
    /// Dimension of a square matrix.
    std::size_t dim() const {
      if (!is_square()) {
        throw DimensionError("matrix is not square");
      }
      return _rows;
    }

    weight_type& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    weight_type const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    std::span<weight_type const> row(std::size_t i) const {
      return {_data.data() + i * _cols, _cols};
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

   private:
    std::size_t              _rows = 0;
    std::size_t              _cols = 0;
    std::vector<weight_type> _data;
  };

  using TropMatrix = Matrix<Rational>;

  template <typename S>
  Matrix<S> mat_mul(Matrix<S> const& a, Matrix<S> const& b) {
    if (a.cols() != b.rows()) {
      throw DimensionError("mat_mul: inner dimensions differ ("
                           + std::to_string(a.cols()) + " vs "
                           + std::to_string(b.rows()) + ")");
    }
    Matrix<S> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        auto const& aik = a(i, k);
        if (aik.is_bottom()) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          auto const& bkj = b(k, j);
          if (bkj.is_bottom()) {
            continue;
          }
          tadd_assign(c(i, j), Weight<S>(S(aik.value() + bkj.value())));
        }
      }
    }
    return c;
  }

  /// Row vector times matrix: the next row of a power sequence.
  template <typename S>
  std::vector<Weight<S>> vec_mat_mul(std::span<Weight<S> const> x,
                                     Matrix<S> const&           a) {
    if (x.size() != a.rows()) {
      throw DimensionError("vec_mat_mul: dimension mismatch");
    }
    std::vector<Weight<S>> y(a.cols());
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].is_bottom()) {
        continue;
      }
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(k, j).is_finite()) {
          tadd_assign(y[j], Weight<S>(S(x[k].value() + a(k, j).value())));
        }
      }
    }
    return y;
  }

  /// Entrywise tropical sum (max).
  template <typename S>
  Matrix<S> mat_add(Matrix<S> const& a, Matrix<S> const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DimensionError("mat_add: shapes differ");
    }
    Matrix<S> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        tadd_assign(c(i, j), b(i, j));
      }
    }
    return c;
  }

  /// A^{⊗t}; A^{⊗0} is the tropical identity.
  template <typename S>
  Matrix<S> power(Matrix<S> const& a, std::size_t t) {
    Matrix<S> result = Matrix<S>::identity(a.dim());
    Matrix<S> base   = a;
    while (t > 0) {
      if (t & 1U) {
        result = mat_mul(result, base);
      }
      t >>= 1U;
      if (t > 0) {
        base = mat_mul(base, base);
      }
    }
    return result;
  }

  /// Lazy sequence A^{⊗1}, A^{⊗2}, ... with A^{⊗(t+1)} = A^{⊗t} ⊗ A.
  template <typename S>
  class PowerStream {
   public:
    explicit PowerStream(Matrix<S> a) : _base(std::move(a)), _current(), _t(0) {
      _base.dim();
    }

    /// Advances and returns the next power.
    Matrix<S> const& next() {
      _current = _t == 0 ? _base : mat_mul(_current, _base);
      ++_t;
      return _current;
    }

    /// Exponent of the power last returned by next() (0 before the first).
    std::size_t exponent() const noexcept {
      return _t;
    }

    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = Matrix<S>;
      using difference_type   = std::ptrdiff_t;
      using reference         = Matrix<S> const&;

      iterator() = default;
      explicit iterator(PowerStream* s) : _stream(s) {
        _stream->next();
      }
      reference operator*() const {
        return _stream->_current;
      }
      iterator& operator++() {
        _stream->next();
        return *this;
      }
      void operator++(int) {
        ++*this;
      }
      // The stream is infinite; pair with std::views::take or break.
      friend bool operator==(iterator const&, std::default_sentinel_t) {
        return false;
      }

     private:
      PowerStream* _stream = nullptr;
    };

    iterator begin() {
      return iterator(this);
    }
    std::default_sentinel_t end() const {
      return {};
    }

   private:
    Matrix<S>   _base;
    Matrix<S>   _current;
    std::size_t _t;
  };

  template <typename S>
  PowerStream<S> mat_power_stream(Matrix<S> const& a) {
    return PowerStream<S>(a);
  }

  /// I ⊕ A ⊕ ... ⊕ A^{⊗(n-1)}. Requires every cycle to have weight <= 0;
  /// otherwise the series does not converge and ClosureDivergence is thrown.
  template <typename S>
  Matrix<S> kleene_star(Matrix<S> const& a) {
    std::size_t const n    = a.dim();
    Matrix<S>         star = Matrix<S>::identity(n);
    Matrix<S>         p    = Matrix<S>::identity(n);
    auto const        zero = Weight<S>::unit();
    for (std::size_t t = 1; t <= n; ++t) {
      p = mat_mul(p, a);
      for (std::size_t i = 0; i < n; ++i) {
        if (less(zero, p(i, i))) {
          throw ClosureDivergence("kleene_star: matrix has a cycle of positive "
                                  "weight through node "
                                  + std::to_string(i));
        }
      }
      if (t < n) {
        star = mat_add(star, p);
      }
    }
    return star;
  }

  /// Diagonal similarity scaling: entry (i, j) becomes a_ij - x_i + x_j.
  template <typename S>
  Matrix<S> scale_diag(Matrix<S> const& a, std::span<Weight<S> const> x) {
    std::size_t const n = a.dim();
    if (x.size() != n) {
      throw DimensionError("scale_diag: scaling vector has wrong length");
    }
    for (auto const& xi : x) {
      if (xi.is_bottom()) {
        throw InvalidArgument("scale_diag: scaling components must be finite");
      }
    }
    Matrix<S> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j).is_finite()) {
          b(i, j) = Weight<S>(S(a(i, j).value() - x[i].value() + x[j].value()));
        }
      }
    }
    return b;
  }

  template <typename S>
  Matrix<S> scale_diag(Matrix<S> const& a, std::vector<Weight<S>> const& x) {
    return scale_diag(a, std::span<Weight<S> const>(x));
  }

}  // namespace troptrans

#endif  // TROPTRANS_MATRIX_HPP
