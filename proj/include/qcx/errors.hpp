// Copyright 2026 The qcx Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcx {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A circuit or instruction violates an IR invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

class CapacityError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class UnknownGateError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ArityError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class IndexError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class DuplicateOperandError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class SemanticsError : public Error {
  public:
    using Error::Error;
};

class SimError : public Error {
  public:
    using Error::Error;
};

class NoMeasurementError : public SimError {
  public:
    using SimError::SimError;
};

class BranchCapError : public SimError {
  public:
    using SimError::SimError;
};

class EmitError : public Error {
  public:
    using Error::Error;
};

/// Circuit text could not be parsed. `line()` is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line),
          reason_(reason) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string &reason() const noexcept {
        return reason_;
    }

  private:
    std::size_t line_;
    std::string reason_;
};

} // namespace qcx
