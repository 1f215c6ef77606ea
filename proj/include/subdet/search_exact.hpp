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

#ifndef SUBDET_SEARCH_EXACT_HPP
#define SUBDET_SEARCH_EXACT_HPP

#include <cstdint>

#include "subdet/objective.hpp"
#include "subdet/types.hpp"

namespace subdet {

inline constexpr std::int64_t kDefaultEnumerationGuard = 2000000;

// Exhaustive enumeration over all C(n, k) subsets in lexicographic order.
// Ties break toward the lexicographically smallest subset. With workers > 1
// the range is partitioned by leading index; the merged result is identical
// to the single-worker run.
SearchResult solve_exact(const ObjectiveSpec& spec, int k,
                         std::int64_t guard = kDefaultEnumerationGuard,
                         int workers = 1);

}  // namespace subdet

#endif  // SUBDET_SEARCH_EXACT_HPP
