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

#ifndef TROPTRANS_WEIGHT_HPP
#define TROPTRANS_WEIGHT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "error.hpp"
#include "scalar.hpp"

namespace troptrans {

  /// An element of the max-plus semiring over S: either a finite value or
  /// the semiring zero (written ⊥, "no edge", log-domain minus infinity).
  /// Default construction gives ⊥.
  template <typename S>
  class Weight {
   public:
    using scalar_type = S;
    using traits      = scalar_traits<S>;

    Weight() = default;
    Weight(S v) : _value(std::move(v)) {}  // NOLINT(runtime/explicit)

    static Weight bottom() {
      return Weight();
    }
    /// The multiplicative unit of the semiring (the number 0).
    static Weight unit() {
      return Weight(traits::from_int(0));
    }

    bool is_finite() const noexcept {
      return _value.has_value();
    }
    bool is_bottom() const noexcept {
      return !_value.has_value();
    }

    S const& value() const {
      if (!_value) {
        throw InvalidArgument("value() called on the semiring zero");
      }
      return *_value;
    }

    std::string to_string() const {
      return _value ? traits::to_string(*_value) : std::string("-inf");
    }

    friend bool operator==(Weight const& a, Weight const& b) {
      if (a.is_bottom() || b.is_bottom()) {
        return a.is_bottom() && b.is_bottom();
      }
      return traits::equal(*a._value, *b._value);
    }

    friend std::ostream& operator<<(std::ostream& os, Weight const& w) {
      return os << w.to_string();
    }

   private:
    std::optional<S> _value;
  };

  /// Strict order with ⊥ below every finite value.
  template <typename S>
  bool less(Weight<S> const& a, Weight<S> const& b) {
    if (b.is_bottom()) {
      return false;
    }
    if (a.is_bottom()) {
      return true;
    }
    return scalar_traits<S>::less(a.value(), b.value());
  }

  /// Tropical addition: max, with ⊥ neutral.
  template <typename S>
  Weight<S> tadd(Weight<S> const& a, Weight<S> const& b) {
    if (a.is_bottom()) {
      return b;
    }
    if (b.is_bottom()) {
      return a;
    }
    return a.value() < b.value() ? b : a;
  }

  /// Tropical multiplication: ordinary sum, with ⊥ absorbing.
  template <typename S>
  Weight<S> tmul(Weight<S> const& a, Weight<S> const& b) {
    if (a.is_bottom() || b.is_bottom()) {
      return Weight<S>();
    }
    return Weight<S>(S(a.value() + b.value()));
  }

  /// In-place a := a ⊕ b. Avoids a copy on the hot path of matrix products.
  template <typename S>
  void tadd_assign(Weight<S>& a, Weight<S> const& b) {
    if (b.is_bottom()) {
      return;
    }
    if (a.is_bottom() || a.value() < b.value()) {
      a = b;
    }
  }

  using TropicalWeight = Weight<Rational>;

  /// Exact weight num/den.
  inline TropicalWeight rational_weight(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) {
      throw InvalidArgument("zero denominator");
    }
    Rational q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    q.canonicalize();
    return TropicalWeight(q);
  }

}  // namespace troptrans

#endif  // TROPTRANS_WEIGHT_HPP
