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

#ifndef SUBDET_SEARCH_GREEDY_HPP
#define SUBDET_SEARCH_GREEDY_HPP

#include "subdet/objective.hpp"
#include "subdet/types.hpp"

namespace subdet {

// Grows the subset from empty by k locally optimal additions. Deterministic;
// ties break toward the smallest candidate index. For the design flavor the
// first p picks maximize the s x s outer determinant det(X[S] X[S]^T),
// which is well defined while the Gram is still rank-deficient.
SearchResult solve_greedy_forward(const ObjectiveSpec& spec, int k);

// Shrinks the subset from the full ground set by n - k locally optimal
// deletions. Requires the objective to be defined on every intermediate
// superset; otherwise raises HeuristicInapplicableError. Ties remove the
// smallest index.
SearchResult solve_greedy_backward(const ObjectiveSpec& spec, int k);

// Repeatedly applies the first improving single swap (scan order: candidates
// ascending, then members ascending) until none improves by more than 1e-12
// on the log scale.
SearchResult refine_exchange(const ObjectiveSpec& spec, const Subset& start);

}  // namespace subdet

#endif  // SUBDET_SEARCH_GREEDY_HPP
