// Copyright 2026 The gbent Authors.
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbent {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical operation is undefined for its argument (inverse of zero,
// quadratic character of zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Arguments do not fit together: mismatched rings, shapes or arities.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A construction hypothesis does not hold for the supplied parameters.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the caller's budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t required)
      : Error(what + " (requires " + std::to_string(required) + ")"),
        required_(required) {}

  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

// Malformed text input. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A table of cyclotomic integers is not the Walsh spectrum of any function.
class SpectrumError : public Error {
 public:
  using Error::Error;
};

// Something that the mathematics guarantees did not happen.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbent
