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

#ifndef SUBDET_OBJECTIVE_HPP
#define SUBDET_OBJECTIVE_HPP

#include <map>
#include <utility>

#include "subdet/types.hpp"

namespace subdet {

// Candidate points as rows, model terms as columns.
using DesignMatrix = Eigen::MatrixXd;

// The quantity maximized over fixed-size subsets, in one of two flavors:
//  - kernel: log det K[S] of a symmetric kernel's principal submatrix;
//  - information-gram: log det(X[S]^T X[S]) of the p x p Gram of the
//    selected design rows (D-criterion).
class ObjectiveSpec {
 public:
  static ObjectiveSpec kernel(SymmetricMatrix k);
  static ObjectiveSpec information_gram(DesignMatrix x);

  bool is_kernel() const { return is_kernel_; }
  // Number of candidate points (ground set size).
  int ground_size() const;
  // Model terms p (information-gram flavor only).
  int term_count() const;

  const SymmetricMatrix& kernel_matrix() const;
  const DesignMatrix& design() const;

 private:
  ObjectiveSpec(bool is_kernel, SymmetricMatrix k, DesignMatrix x)
      : is_kernel_(is_kernel), kernel_(std::move(k)), design_(std::move(x)) {}
  bool is_kernel_;
  SymmetricMatrix kernel_;
  DesignMatrix design_;
};

// Log objective value for subset S. Throws InvalidSubsetError on malformed
// subsets (including |S| < p for the Gram flavor) and
// ObjectiveUndefinedError when the determinant is not positive.
double log_objective(const ObjectiveSpec& spec, const Subset& s);

// log_objective that maps undefined objectives to -infinity; used as the
// fitness of the stochastic searches.
double log_objective_or_neg_inf(const ObjectiveSpec& spec, const Subset& s);

// Marginal kernel K = L (L + I)^{-1}, computed spectrally. Eigenvalues of
// the result lie in [0, 1).
SymmetricMatrix marginal_kernel(const SymmetricMatrix& l);

// Exact probability table of the fixed-size determinantal distribution:
// P(Y) = det(L[Y]) / sum over |Y'| = k of det(L[Y']). Enumeration oracle,
// guarded at n <= 20.
std::map<Subset, double> kdpp_pmf(const SymmetricMatrix& l, int k);

// Two independent routes to the normalizing constant: direct enumeration of
// subdeterminants, and the elementary symmetric polynomial e_k of the
// eigenvalues. They agree within 1e-8 relative error by contract.
struct NormalizerCheck {
  double enumerated_sum;
  double esp_value;
};
NormalizerCheck kdpp_normalizer_check(const SymmetricMatrix& l, int k);

}  // namespace subdet

#endif  // SUBDET_OBJECTIVE_HPP
