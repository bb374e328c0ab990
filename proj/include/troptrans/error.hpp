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

#ifndef TROPTRANS_ERROR_HPP
#define TROPTRANS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace troptrans {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  /// Bad argument or violated precondition.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  /// Kleene star requested for a matrix with a positive cycle.
  class ClosureDivergence : public Error {
   public:
    using Error::Error;
  };

  /// The associated digraph has no cycle, so there is no cycle mean and no
  /// critical graph (the matrix is nilpotent).
  class AcyclicMatrix : public Error {
   public:
    using Error::Error;
  };

  class NotStronglyConnected : public Error {
   public:
    using Error::Error;
  };

  /// Periodicity was not detected before the power cap was reached.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  /// Related critical components of a factorization disagree on girth.
  class GirthMismatch : public Error {
   public:
    using Error::Error;
  };

  /// A post-condition check of the library itself failed.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace troptrans

#endif  // TROPTRANS_ERROR_HPP
