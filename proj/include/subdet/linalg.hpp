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

#ifndef SUBDET_LINALG_HPP
#define SUBDET_LINALG_HPP

#include "subdet/types.hpp"

namespace subdet {

// Rows and columns of A restricted to S.
SymmetricMatrix principal_submatrix(const SymmetricMatrix& a,
                                    const Subset& s);

// log det(A) for symmetric positive definite A, via Cholesky. The
// determinant itself is never materialized. A pivot at or below
// 1e-12 * max diagonal raises NotPositiveDefiniteError with its index.
double log_det_spd(const SymmetricMatrix& a);

// Same, operating directly on a dense symmetric matrix (lower triangle read).
double log_det_spd(const Eigen::MatrixXd& a);

// Full symmetric eigendecomposition, eigenvalues ascending.
EigenDecomposition eigendecompose(const SymmetricMatrix& a);

}  // namespace subdet

#endif  // SUBDET_LINALG_HPP
