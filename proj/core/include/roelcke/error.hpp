// Copyright 2026 The roelcke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROELCKE_ERROR_HPP
#define ROELCKE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace roelcke {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad sizes, non-antichains, non-bijections, syntax.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (depth, level, cardinality) was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A post-condition the library certifies did not hold. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace roelcke

#endif  // ROELCKE_ERROR_HPP
