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

#include "subdet/types.hpp"

#include <algorithm>
#include <numeric>

namespace subdet {

Subset Subset::checked(std::vector<int> indices, int n) {
  if (indices.empty()) {
    throw InvalidSubsetError("subset must be non-empty");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n) {
      throw InvalidSubsetError("subset index " +
                               std::to_string(indices[i] + 1) +
                               " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw InvalidSubsetError("subset indices must be strictly increasing");
    }
  }
  return Subset(std::move(indices));
}

Subset Subset::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Subset(std::move(all));
}

bool Subset::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd m) : data_(std::move(m)) {
  if (data_.rows() < 1 || data_.rows() != data_.cols()) {
    throw ConfigError("symmetric matrix must be square with order >= 1");
  }
  if (!data_.allFinite()) {
    throw ConfigError("symmetric matrix entries must be finite");
  }
  for (Eigen::Index i = 0; i < data_.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (data_(i, j) != data_(j, i)) {
        throw ConfigError("matrix is not exactly symmetric at (" +
                          std::to_string(i + 1) + ", " +
                          std::to_string(j + 1) + ")");
      }
    }
  }
}

SymmetricMatrix SymmetricMatrix::from_dense(const Eigen::MatrixXd& m,
                                            double tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw ConfigError("matrix must be square with order >= 1");
  }
  if (!m.allFinite()) {
    throw ConfigError("matrix entries must be finite");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double bound = tol * scale;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > bound) {
        throw ConfigError("matrix asymmetric beyond tolerance at (" +
                          std::to_string(i + 1) + ", " +
                          std::to_string(j + 1) + ")");
      }
    }
  }
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  return SymmetricMatrix(std::move(sym));
}

}  // namespace subdet
