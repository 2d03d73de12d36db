// Copyright 2026 The qsw Authors.
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

namespace qsw {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside its documented domain (parameter range, size
// mismatch, malformed input).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A probability vector has negative entries or does not normalize.
class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

// A conditional distribution violates the no-signaling marginal constraints.
class NotNoSignaling : public Error {
 public:
  NotNoSignaling(const std::string& what, double worst_violation)
      : Error(what), worst_violation_(worst_violation) {}

  // Largest absolute mismatch between the two contexts of one marginal.
  double worst_violation() const { return worst_violation_; }

 private:
  double worst_violation_;
};

// Numerical solver failed to terminate or hit an internal limit.
class SolverError : public Error {
 public:
  using Error::Error;
};

// A root-bracketing scan found no sign change over the requested range.
class NoThresholdError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsw
