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

#include "subdet/linalg.hpp"

#include <cmath>

namespace subdet {

SymmetricMatrix principal_submatrix(const SymmetricMatrix& a,
                                    const Subset& s) {
  const int n = a.order();
  const auto& idx = s.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= n) {
      throw InvalidSubsetError("subset index " + std::to_string(idx[i] + 1) +
                               " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && idx[i] <= idx[i - 1]) {
      throw InvalidSubsetError("subset indices must be strictly increasing");
    }
  }
  const int m = s.size();
  Eigen::MatrixXd sub(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = a(idx[i], idx[j]);
      sub(i, j) = v;
      sub(j, i) = v;
    }
  }
  return SymmetricMatrix(std::move(sub));
}

double log_det_spd(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  // In-place Cholesky on a copy; only the lower triangle is referenced.
  Eigen::MatrixXd l = a;
  const double max_diag = a.diagonal().maxCoeff();
  const double threshold = 1e-12 * std::max(max_diag, 0.0);

  double half_log_det = 0.0;
  for (int j = 0; j < n; ++j) {
    const double pivot = l(j, j) - l.row(j).head(j).squaredNorm();
    if (pivot <= threshold) {
      throw NotPositiveDefiniteError(
          "matrix not positive definite: pivot " + std::to_string(pivot) +
              " at index " + std::to_string(j + 1),
          j);
    }
    const double ljj = std::sqrt(pivot);
    l(j, j) = ljj;
    half_log_det += std::log(ljj);
    const int rest = n - j - 1;
    if (rest > 0) {
      l.col(j).tail(rest) =
          (l.col(j).tail(rest) -
           l.bottomLeftCorner(rest, j) * l.row(j).head(j).transpose()) /
          ljj;
    }
  }
  return 2.0 * half_log_det;
}

double log_det_spd(const SymmetricMatrix& a) { return log_det_spd(a.data()); }

EigenDecomposition eigendecompose(const SymmetricMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.data());
  if (solver.info() != Eigen::Success) {
    throw NumericalFailureError("symmetric eigensolver did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace subdet
