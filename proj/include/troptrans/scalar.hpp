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

// Scalar policies for the max-plus semiring. Exact mode runs over GMP
// rationals; approximate mode runs over doubles with a process-wide
// comparison tolerance and is only meant for decimal max-times input.

#ifndef TROPTRANS_SCALAR_HPP
#define TROPTRANS_SCALAR_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include <gmpxx.h>

namespace troptrans {

  using Rational = mpq_class;

  template <typename S>
  struct scalar_traits;

  template <>
  struct scalar_traits<Rational> {
    static constexpr bool exact = true;

    static bool equal(Rational const& a, Rational const& b) {
      return a == b;
    }
    static bool less(Rational const& a, Rational const& b) {
      return a < b;
    }
    static Rational from_int(std::int64_t v) {
      return Rational(static_cast<long>(v));
    }
    static Rational divide(Rational const& a, std::int64_t d) {
      Rational q = a / Rational(static_cast<long>(d));
      q.canonicalize();
      return q;
    }
    static std::string to_string(Rational const& a) {
      return a.get_str();
    }
    static double to_double(Rational const& a) {
      return a.get_d();
    }
  };

  template <>
  struct scalar_traits<double> {
    static constexpr bool exact = false;

    static std::atomic<double>& tolerance_storage() {
      static std::atomic<double> tol{1e-9};
      return tol;
    }
    static double tolerance() {
      return tolerance_storage().load(std::memory_order_relaxed);
    }
    static void set_tolerance(double tol) {
      tolerance_storage().store(tol, std::memory_order_relaxed);
    }

    static bool equal(double a, double b) {
      return std::abs(a - b) <= tolerance();
    }
    static bool less(double a, double b) {
      return a < b - tolerance();
    }
    static double from_int(std::int64_t v) {
      return static_cast<double>(v);
    }
    static double divide(double a, std::int64_t d) {
      return a / static_cast<double>(d);
    }
    static std::string to_string(double a) {
      std::ostringstream os;
      os.precision(17);
      os << a;
      return os.str();
    }
    static double to_double(double a) {
      return a;
    }
  };

}  // namespace troptrans

#endif  // TROPTRANS_SCALAR_HPP
