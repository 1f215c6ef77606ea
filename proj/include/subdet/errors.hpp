// Copyright 2026 The Authors.
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

#ifndef SUBDET_ERRORS_HPP
#define SUBDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subdet {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset violates its invariants (duplicates, out-of-range, bad size).
class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

// Triangular factorization hit a non-positive pivot. Carries the 0-based
// index of the failing pivot.
class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(const std::string& what, int pivot_index)
      : Error(what), pivot_index_(pivot_index) {}
  int pivot_index() const { return pivot_index_; }

 private:
  int pivot_index_;
};

// The objective value does not exist for the given subset (rank-deficient
// Gram, non-PD principal submatrix). Stochastic searches map this to -inf.
class ObjectiveUndefinedError : public Error {
 public:
  using Error::Error;
};

// An enumeration guard was exceeded.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

// An iterative numerical routine failed to converge or lost precision
// beyond its contract.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

// A kernel fails PSD-type validation (e.g. significantly negative
// eigenvalue, rank below the requested cardinality).
class InvalidKernelError : public Error {
 public:
  using Error::Error;
};

// A heuristic cannot run on the given instance (e.g. backward greedy on a
// kernel whose intermediate supersets are not positive definite).
class HeuristicInapplicableError : public Error {
 public:
  using Error::Error;
};

// Not enough observations to form an estimate.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// A configuration value violates its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace subdet

#endif  // SUBDET_ERRORS_HPP
