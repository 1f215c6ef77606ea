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

#ifndef SUBDET_COMBINATIONS_HPP
#define SUBDET_COMBINATIONS_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace subdet {

// C(n, k) saturating at int64 max.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr double kSaturation =
      static_cast<double>(std::numeric_limits<std::int64_t>::max());
  long double result = 1.0L;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSaturation) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::int64_t>(result + 0.5L);
}

// Advances a strictly increasing k-combination of {0, ..., n-1} to its
// lexicographic successor. Returns false when the last combination was
// already reached.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Lexicographically first k-combination.
inline std::vector<int> first_combination(int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace subdet

#endif  // SUBDET_COMBINATIONS_HPP
