// Copyright 2026 The commq Authors
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

#ifndef COMMQ_ERROR_H
#define COMMQ_ERROR_H

#include <stdexcept>
#include <string>
#include <vector>

namespace commq {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A circuit or gate violates a structural invariant (qubit ranges, unitarity, roles).
class ValidationError : public Error {
   public:
    explicit ValidationError(std::vector<std::string> diagnostics);
    const std::vector<std::string> &diagnostics() const {
        return diagnostics_;
    }

   private:
    std::vector<std::string> diagnostics_;
};

/// Malformed circuit or distribution text. `position` is a byte offset or a JSON pointer.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, std::string position);
    const std::string &position() const {
        return position_;
    }

   private:
    std::string position_;
};

/// The request exceeds a configured cap (qubits, outputs, arity).
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// An operation was handed a gate or circuit outside the family it supports.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A caller broke an argument contract (lengths, ranges).
class ContractError : public Error {
   public:
    using Error::Error;
};

/// An internal consistency check failed (norm drift, non-real expectation).
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

/// Conditioning on an outcome of (numerically) zero probability.
class UnconditionableError : public Error {
   public:
    explicit UnconditionableError(double probability);
    double probability() const {
        return probability_;
    }

   private:
    double probability_;
};

}  // namespace commq

#endif
