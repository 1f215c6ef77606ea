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

#include "subdet/search_exact.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <thread>
#include <vector>

#include "subdet/combinations.hpp"

namespace subdet {

namespace {

struct Improvement {
  std::int64_t evaluation;
  double value;
};

struct BlockResult {
  std::vector<Improvement> improvements;
  Subset best_subset;
  double best_value = -std::numeric_limits<double>::infinity();
};

// Enumerates all k-combinations whose leading index lies in [first, last),
// in lexicographic order, starting the evaluation counter at base.
BlockResult enumerate_block(const ObjectiveSpec& spec, int k, int first,
                            int last, std::int64_t base) {
  const int n = spec.ground_size();
  BlockResult block;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = first + i;

  std::int64_t evaluation = base;
  do {
    if (c[0] >= last) break;
    ++evaluation;
    const double value =
        log_objective_or_neg_inf(spec, Subset::from_sorted(c));
    if (value > block.best_value) {
      block.best_value = value;
      block.best_subset = Subset::from_sorted(c);
      block.improvements.push_back({evaluation, value});
    }
  } while (next_combination(c, n));
  return block;
}

}  // namespace

SearchResult solve_exact(const ObjectiveSpec& spec, int k, std::int64_t guard,
                         int workers) {
  const int n = spec.ground_size();
  if (k < 1 || k > n) {
    throw InvalidSubsetError("cardinality k must lie in [1, n]");
  }
  if (workers < 1) throw ConfigError("worker count must be >= 1");
  const std::int64_t total = binomial(n, k);
  if (total > guard) {
    throw InstanceTooLargeError(
        "C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
        std::to_string(total) + " subsets exceed the enumeration guard " +
        std::to_string(guard));
  }

  const auto start = std::chrono::steady_clock::now();

  // Evaluation-count offset of the first combination led by each index.
  const int lead_count = n - k + 1;
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(lead_count) + 1,
                                    0);
  for (int f = 0; f < lead_count; ++f) {
    offsets[static_cast<std::size_t>(f) + 1] =
        offsets[static_cast<std::size_t>(f)] + binomial(n - 1 - f, k - 1);
  }

  const int used = std::min(workers, lead_count);
  std::vector<BlockResult> blocks(static_cast<std::size_t>(used));
  if (used == 1) {
    blocks[0] = enumerate_block(spec, k, 0, lead_count, 0);
  } else {
    // Split leading indices by evaluation weight, not by index count.
    std::vector<int> bounds;
    bounds.push_back(0);
    for (int w = 1; w < used; ++w) {
      const std::int64_t target = total * w / used;
      int f = bounds.back() + 1;
      while (f < lead_count && offsets[static_cast<std::size_t>(f)] < target) {
        ++f;
      }
      bounds.push_back(
          std::clamp(f, bounds.back() + 1, lead_count - (used - w)));
    }
    bounds.push_back(lead_count);

    std::vector<std::thread> pool;
    for (int w = 0; w < used; ++w) {
      pool.emplace_back([&, w] {
        blocks[static_cast<std::size_t>(w)] = enumerate_block(
            spec, k, bounds[static_cast<std::size_t>(w)],
            bounds[static_cast<std::size_t>(w) + 1],
            offsets[static_cast<std::size_t>(
                bounds[static_cast<std::size_t>(w)])]);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Sequential merge reproduces the single-worker improvement sequence:
  // blocks are in global lexicographic order and only strict improvements
  // are kept.
  SearchResult result;
  result.evaluations = total;
  result.best_log_objective = -std::numeric_limits<double>::infinity();
  for (const BlockResult& block : blocks) {
    for (const Improvement& imp : block.improvements) {
      if (imp.value > result.best_log_objective) {
        result.best_log_objective = imp.value;
        result.trace.emplace_back(imp.evaluation, imp.value);
      }
    }
  }
  // Earliest block attaining the merged maximum holds the lexicographically
  // smallest maximizer.
  for (const BlockResult& block : blocks) {
    if (!block.best_subset.empty() &&
        block.best_value == result.best_log_objective) {
      result.best_subset = block.best_subset;
      break;
    }
  }
  if (result.best_subset.empty()) {
    throw ObjectiveUndefinedError(
        "the objective is undefined on every subset of the instance");
  }

  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace subdet
