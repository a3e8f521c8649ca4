// Copyright 2026 The tropicurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROPICURV_ERRORS_HPP_
#define TROPICURV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tropicurv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched or too-small dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Coincident vertices, zero-length segments, empty polytopes.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (points, rationals, sampler specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment or sampler configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropicurv

#endif  // TROPICURV_ERRORS_HPP_
