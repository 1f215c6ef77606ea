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

#include "subdet/generators.hpp"

#include <string>

namespace subdet {

SymmetricMatrix synthetic_matrix(const SyntheticSpec& spec) {
  if (spec.k < 10) {
    throw ConfigError("synthetic construction needs k >= 10 (it references "
                      "ten special rows)");
  }
  if (spec.n < spec.k) {
    throw ConfigError("synthetic construction needs n >= k");
  }
  if (spec.d <= 0.0) {
    throw ConfigError("synthetic diagonal d must be positive");
  }

  const int n = spec.n;
  const int band_start = n - spec.k + 1;  // 1-based row of the b-band
  Eigen::MatrixXd m(n, n);
  for (int i = 1; i <= n; ++i) {
    m(i - 1, i - 1) = i < band_start ? spec.d : spec.d + spec.delta;
    for (int j = 1; j < i; ++j) {
      double value;
      if (i == band_start) {
        value = spec.b;
      } else if (i >= band_start + 1 && i <= band_start + 9) {
        value = spec.c;
      } else {
        value = spec.a;
      }
      m(i - 1, j - 1) = value;
      m(j - 1, i - 1) = value;
    }
  }
  return SymmetricMatrix(std::move(m));
}

DesignMatrix factorial_design(const FactorialSpec& spec) {
  if (spec.levels.empty()) {
    throw ConfigError("factorial design needs at least one factor");
  }
  long long rows = 1;
  for (int levels : spec.levels) {
    if (levels < 2) {
      throw ConfigError("every factor needs at least 2 levels");
    }
    rows *= levels;
    if (rows > 10000000) {
      throw InstanceTooLargeError("factorial candidate set too large");
    }
  }

  const int factors = static_cast<int>(spec.levels.size());
  const int cols = factors + (spec.intercept ? 1 : 0);
  DesignMatrix x(rows, cols);
  std::vector<int> counter(static_cast<std::size_t>(factors), 0);
  for (long long r = 0; r < rows; ++r) {
    int col = 0;
    if (spec.intercept) x(r, col++) = 1.0;
    for (int f = 0; f < factors; ++f) {
      const int levels = spec.levels[static_cast<std::size_t>(f)];
      // Equally spaced coding on [-1, 1].
      x(r, col++) =
          -1.0 + 2.0 * counter[static_cast<std::size_t>(f)] / (levels - 1);
    }
    // Odometer increment, first factor most significant.
    for (int f = factors - 1; f >= 0; --f) {
      if (++counter[static_cast<std::size_t>(f)] <
          spec.levels[static_cast<std::size_t>(f)]) {
        break;
      }
      counter[static_cast<std::size_t>(f)] = 0;
    }
  }
  return x;
}

SymmetricMatrix covariance_from_observations(const Eigen::MatrixXd& data) {
  const Eigen::Index t = data.rows();
  if (t < 2) {
    throw InsufficientDataError(
        "covariance estimation needs at least 2 observations, got " +
        std::to_string(t));
  }
  if (!data.allFinite()) {
    throw InsufficientDataError("observations contain missing or non-finite "
                                "values");
  }
  const Eigen::MatrixXd centered =
      data.rowwise() - data.colwise().mean();
  Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(t - 1);
  return SymmetricMatrix(0.5 * (cov + cov.transpose()).eval());
}

}  // namespace subdet
