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

#ifndef SUBDET_TYPES_HPP
#define SUBDET_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "subdet/errors.hpp"

namespace subdet {

// Fixed-size index set over the ground set {0, ..., n-1}. Indices are kept
// strictly increasing. All user-facing output converts to 1-based.
class Subset {
 public:
  Subset() = default;

  // Validates strict increase and range [0, n) before wrapping.
  static Subset checked(std::vector<int> indices, int n);

  // Wraps an already sorted, duplicate-free vector (internal fast path).
  static Subset from_sorted(std::vector<int> indices) {
    return Subset(std::move(indices));
  }

  static Subset full(int n);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  const std::vector<int>& indices() const { return indices_; }

  bool contains(int i) const;

  bool operator==(const Subset& other) const {
    return indices_ == other.indices_;
  }
  bool operator!=(const Subset& other) const { return !(*this == other); }
  // Lexicographic order; used for deterministic tie-breaking.
  bool operator<(const Subset& other) const {
    return indices_ < other.indices_;
  }

 private:
  explicit Subset(std::vector<int> indices) : indices_(std::move(indices)) {}
  std::vector<int> indices_;
};

// Dense symmetric matrix. Symmetry holds exactly: construction either
// verifies a_ij == a_ji bit-for-bit or averages the two triangles.
class SymmetricMatrix {
 public:
  // Requires m square with order >= 1, finite entries and exact symmetry.
  explicit SymmetricMatrix(Eigen::MatrixXd m);

  // Validates |a_ij - a_ji| <= tol * max(1, max|a|) and symmetrizes by
  // averaging (exact symmetry afterwards since 0.5*(a+b) is commutative).
  static SymmetricMatrix from_dense(const Eigen::MatrixXd& m,
                                    double tol = 1e-9);

  static SymmetricMatrix identity(int n) {
    return SymmetricMatrix(Eigen::MatrixXd::Identity(n, n));
  }

  int order() const { return static_cast<int>(data_.rows()); }
  double operator()(int i, int j) const { return data_(i, j); }
  const Eigen::MatrixXd& data() const { return data_; }

 private:
  Eigen::MatrixXd data_;
};

// Symmetric eigendecomposition A = V diag(values) V^T, eigenvalues ascending,
// eigenvectors the columns of an orthogonal matrix.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

// Outcome of a solver run. The trace records best-so-far improvements as
// (evaluation index, value) pairs; values are non-decreasing and the last
// entry equals best_log_objective.
struct SearchResult {
  Subset best_subset;
  double best_log_objective = 0.0;
  std::int64_t evaluations = 0;
  std::vector<std::pair<std::int64_t, double>> trace;
  std::optional<std::uint64_t> seed;
  double wall_time_ms = 0.0;
};

}  // namespace subdet

#endif  // SUBDET_TYPES_HPP
