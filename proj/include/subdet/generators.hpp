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

#ifndef SUBDET_GENERATORS_HPP
#define SUBDET_GENERATORS_HPP

#include <vector>

#include "subdet/objective.hpp"
#include "subdet/types.hpp"

namespace subdet {

// Banded synthetic benchmark kernel. With 1-based indices: the diagonal is d
// below row n-k+1 and d+delta from it on; off-diagonal entries are b in
// row/column n-k+1, c in rows/columns n-k+2 .. n-k+10, and a elsewhere.
struct SyntheticSpec {
  int n = 100;
  int k = 60;
  double a = 0.2;
  double b = 0.9;
  double c = 0.65;
  double d = 7.0;
  double delta = 1.0;
};

SymmetricMatrix synthetic_matrix(const SyntheticSpec& spec);

// Full-factorial candidate set. Each factor's levels are coded equally
// spaced on [-1, 1]; rows are ordered lexicographically with the first
// factor most significant. An all-ones intercept column leads when enabled.
struct FactorialSpec {
  std::vector<int> levels;
  bool intercept = true;
};

DesignMatrix factorial_design(const FactorialSpec& spec);

// Unbiased sample covariance (divisor T-1) of T observations x n variables.
SymmetricMatrix covariance_from_observations(const Eigen::MatrixXd& data);

}  // namespace subdet

#endif  // SUBDET_GENERATORS_HPP
