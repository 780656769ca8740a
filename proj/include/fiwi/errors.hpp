// Copyright 2026 The fiwi Authors.
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

#ifndef FIWI_ERRORS_HPP_
#define FIWI_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fiwi {

// Invalid physical input: non-finite values, non-positive noise, empty UE sets.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index outside a valid range, e.g. a prefix length larger than the catalog.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Caching power leaves nothing for transmission: (P_M - w*j*s)/rho <= 0.
class NoTransmitBudget : public DomainError {
 public:
  using DomainError::DomainError;
};

// An oracle declined an instance that is too large to enumerate.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed scenario or sweep file. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string field, std::size_t line = 0)
      : std::runtime_error(what), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

}  // namespace fiwi

#endif  // FIWI_ERRORS_HPP_
