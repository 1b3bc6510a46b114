// Copyright 2026 The qnet Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnet {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Rejected parameters or configuration values. The CLI maps these to exit code 1.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
  public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : InvalidArgument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Failures of numerical contracts. The CLI maps these to exit code 2.
class NumericalError : public Error {
  public:
    using Error::Error;
};

class NotUnitary : public NumericalError {
  public:
    explicit NotUnitary(double defect)
        : NumericalError("matrix is not unitary (defect " + std::to_string(defect) + ")"), defect_(defect) {}
    double defect() const { return defect_; }

  private:
    double defect_;
};

class ConvergenceError : public NumericalError {
  public:
    ConvergenceError(const std::string &what, std::size_t iterations)
        : NumericalError(what + " did not converge after " + std::to_string(iterations) + " iterations"),
          iterations_(iterations) {}
    std::size_t iterations() const { return iterations_; }

  private:
    std::size_t iterations_;
};

/// Too few ports above the probability floor to fit a profile.
class InsufficientSupport : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

/// File system failures. The CLI maps these to exit code 3.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace qnet
