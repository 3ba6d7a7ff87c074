// Copyright 2026 The qdelta Authors
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

#include <stdexcept>
#include <string>
#include <utility>

namespace qdelta {

// Base class for every error raised by the library. `invariant()` names the
// violated contract so callers (the CLI in particular) can report it.
class Error : public std::runtime_error {
 public:
  Error(std::string invariant, const std::string& what)
      : std::runtime_error(what), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Precondition stated by an operation's contract does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A value (operator, state, scheme, config, file) fails validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdelta
