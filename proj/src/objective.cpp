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

#include "subdet/objective.hpp"

#include <cmath>
#include <limits>

#include "subdet/combinations.hpp"
#include "subdet/linalg.hpp"
#include "subdet/sampler_dpp.hpp"

namespace subdet {

namespace {
constexpr int kEnumerationGuard = 20;

// Determinant of L restricted to the combination c, via LU. Used only by
// the enumeration oracles (n <= 20).
double subdeterminant(const Eigen::MatrixXd& l, const std::vector<int>& c) {
  const int m = static_cast<int>(c.size());
  Eigen::MatrixXd sub(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) sub(i, j) = l(c[i], c[j]);
  }
  return sub.determinant();
}
}  // namespace

ObjectiveSpec ObjectiveSpec::kernel(SymmetricMatrix k) {
  return ObjectiveSpec(true, std::move(k), DesignMatrix());
}

ObjectiveSpec ObjectiveSpec::information_gram(DesignMatrix x) {
  if (x.rows() < 1 || x.cols() < 1) {
    throw ConfigError("design matrix must have at least one row and column");
  }
  if (x.rows() < x.cols()) {
    throw ConfigError("design matrix needs at least as many candidates as "
                      "model terms");
  }
  if (!x.allFinite()) {
    throw ConfigError("design matrix entries must be finite");
  }
  return ObjectiveSpec(false, SymmetricMatrix::identity(1), std::move(x));
}

int ObjectiveSpec::ground_size() const {
  return is_kernel_ ? kernel_.order() : static_cast<int>(design_.rows());
}

int ObjectiveSpec::term_count() const {
  if (is_kernel_) {
    throw ConfigError("term_count is only defined for the design flavor");
  }
  return static_cast<int>(design_.cols());
}

const SymmetricMatrix& ObjectiveSpec::kernel_matrix() const {
  if (!is_kernel_) {
    throw ConfigError("objective spec holds a design matrix, not a kernel");
  }
  return kernel_;
}

const DesignMatrix& ObjectiveSpec::design() const {
  if (is_kernel_) {
    throw ConfigError("objective spec holds a kernel, not a design matrix");
  }
  return design_;
}

double log_objective(const ObjectiveSpec& spec, const Subset& s) {
  const int n = spec.ground_size();
  const auto& idx = s.indices();
  if (idx.empty()) throw InvalidSubsetError("subset must be non-empty");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= n) {
      throw InvalidSubsetError("subset index " + std::to_string(idx[i] + 1) +
                               " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && idx[i] <= idx[i - 1]) {
      throw InvalidSubsetError("subset indices must be strictly increasing");
    }
  }

  if (spec.is_kernel()) {
    try {
      return log_det_spd(principal_submatrix(spec.kernel_matrix(), s));
    } catch (const NotPositiveDefiniteError& e) {
      throw ObjectiveUndefinedError(e.what());
    }
  }

  const DesignMatrix& x = spec.design();
  const int p = static_cast<int>(x.cols());
  if (s.size() < p) {
    throw InvalidSubsetError("design subset needs at least " +
                             std::to_string(p) + " points, got " +
                             std::to_string(s.size()));
  }
  Eigen::MatrixXd rows(s.size(), p);
  for (int i = 0; i < s.size(); ++i) rows.row(i) = x.row(idx[i]);
  Eigen::MatrixXd gram = rows.transpose() * rows;
  gram = 0.5 * (gram + gram.transpose()).eval();
  try {
    return log_det_spd(gram);
  } catch (const NotPositiveDefiniteError& e) {
    throw ObjectiveUndefinedError(e.what());
  }
}

double log_objective_or_neg_inf(const ObjectiveSpec& spec, const Subset& s) {
  try {
    return log_objective(spec, s);
  } catch (const ObjectiveUndefinedError&) {
    return -std::numeric_limits<double>::infinity();
  }
}

SymmetricMatrix marginal_kernel(const SymmetricMatrix& l) {
  const EigenDecomposition eig = eigendecompose(l);
  Eigen::VectorXd mapped = eig.values.array() / (1.0 + eig.values.array());
  Eigen::MatrixXd k =
      eig.vectors * mapped.asDiagonal() * eig.vectors.transpose();
  return SymmetricMatrix(0.5 * (k + k.transpose()).eval());
}

std::map<Subset, double> kdpp_pmf(const SymmetricMatrix& l, int k) {
  const int n = l.order();
  if (n > kEnumerationGuard) {
    throw InstanceTooLargeError("pmf enumeration limited to n <= " +
                                std::to_string(kEnumerationGuard) +
                                ", got n = " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw InvalidSubsetError("cardinality k must lie in [1, n]");
  }

  std::map<Subset, double> pmf;
  double total = 0.0;
  std::vector<int> c = first_combination(k);
  do {
    // Clamp the tiny negatives a PSD kernel can produce through roundoff.
    const double det = std::max(subdeterminant(l.data(), c), 0.0);
    total += det;
    pmf.emplace(Subset::from_sorted(c), det);
  } while (next_combination(c, n));

  if (total <= 0.0) {
    throw InvalidKernelError("kernel has rank below the requested "
                             "cardinality; all subdeterminants vanish");
  }
  for (auto& [subset, p] : pmf) p /= total;
  return pmf;
}

NormalizerCheck kdpp_normalizer_check(const SymmetricMatrix& l, int k) {
  const int n = l.order();
  if (n > kEnumerationGuard) {
    throw InstanceTooLargeError("normalizer enumeration limited to n <= " +
                                std::to_string(kEnumerationGuard) +
                                ", got n = " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw InvalidSubsetError("cardinality k must lie in [1, n]");
  }

  double enumerated = 0.0;
  std::vector<int> c = first_combination(k);
  do {
    enumerated += subdeterminant(l.data(), c);
  } while (next_combination(c, n));

  const EigenDecomposition eig = eigendecompose(l);
  std::vector<double> lambda(eig.values.data(), eig.values.data() + n);
  const ElementarySymmetricTable table = elementary_symmetric(lambda, k);
  return NormalizerCheck{enumerated, table.at(k, n)};
}

}  // namespace subdet
