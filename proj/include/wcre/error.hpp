// Copyright 2026 The wcre Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCRE_ERROR_HPP_
#define WCRE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wcre {

// Base of every exception thrown by the library. The CLI maps the concrete
// subclasses onto exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument or configuration value was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Evaluation requested outside the support, e.g. at an age with zero
// survival probability.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inadmissible observations (negative values, bad tokens).
class DataError : public Error {
 public:
  using Error::Error;
};

// The requested functional is infinite for the given parameters.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// A numerical scheme failed to reach its accuracy contract.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wcre

#endif  // WCRE_ERROR_HPP_
