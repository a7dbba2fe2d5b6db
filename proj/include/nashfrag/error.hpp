// Copyright 2026 The nashfrag Authors
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

#ifndef NASHFRAG_ERROR_HPP_
#define NASHFRAG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nashfrag {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated: dimension mismatch, index out
// of range, bad parameter, malformed probability vector.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A work budget (profile count, support cap, combination count) would be
// exceeded.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t required,
                 std::size_t allowed)
      : Error(what + ": requires " + std::to_string(required) +
              ", allowed " + std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::size_t required() const { return required_; }
  std::size_t allowed() const { return allowed_; }

 private:
  std::size_t required_;
  std::size_t allowed_;
};

// The game is not two-player zero-sum.
class NotZeroSum : public Error {
 public:
  using Error::Error;
};

// An operation defined only at (epsilon-)equilibria received something else.
class NotEquilibrium : public Error {
 public:
  NotEquilibrium(double residual, double tol)
      : Error("profile is not an equilibrium: residual " +
              std::to_string(residual) + " exceeds tolerance " +
              std::to_string(tol)),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

// Every solver stage ran out of budget without meeting the tolerance.
class SolveFailed : public Error {
 public:
  SolveFailed(double best_residual, double tol)
      : Error("no equilibrium within tolerance " + std::to_string(tol) +
              " found; best residual " + std::to_string(best_residual) +
              " (increase the solver budgets)"),
        best_residual_(best_residual) {}

  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

class LpError : public Error {
 public:
  enum class Kind { kInfeasible, kUnbounded, kIterationLimit };

  LpError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Diagnostic while reading a game document. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace nashfrag

#endif  // NASHFRAG_ERROR_HPP_
