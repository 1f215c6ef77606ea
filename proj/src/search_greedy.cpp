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

#include "subdet/search_greedy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "subdet/linalg.hpp"

namespace subdet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSwapImprovementThreshold = 1e-12;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Objective used while the forward greedy grows its set. For the design
// flavor with fewer points than model terms the p x p Gram is singular, so
// the s x s outer product det(X[S] X[S]^T) drives the first p picks.
double growing_value(const ObjectiveSpec& spec, const std::vector<int>& s) {
  if (!spec.is_kernel() &&
      static_cast<int>(s.size()) < spec.term_count()) {
    const DesignMatrix& x = spec.design();
    const int m = static_cast<int>(s.size());
    Eigen::MatrixXd rows(m, x.cols());
    for (int i = 0; i < m; ++i) rows.row(i) = x.row(s[static_cast<std::size_t>(i)]);
    Eigen::MatrixXd outer = rows * rows.transpose();
    outer = 0.5 * (outer + outer.transpose()).eval();
    try {
      return log_det_spd(outer);
    } catch (const NotPositiveDefiniteError&) {
      return kNegInf;
    }
  }
  return log_objective_or_neg_inf(spec, Subset::from_sorted(s));
}

// Keeps the trace non-decreasing with the final entry equal to the final
// value: running-set values that overshoot the final value are dropped.
void finish_trace(std::vector<std::pair<std::int64_t, double>>& trace,
                  std::int64_t final_evaluation, double final_value) {
  while (!trace.empty() && trace.back().second > final_value) {
    trace.pop_back();
  }
  if (trace.empty() || trace.back().second < final_value ||
      trace.back().first != final_evaluation) {
    trace.emplace_back(final_evaluation, final_value);
  }
}

}  // namespace

SearchResult solve_greedy_forward(const ObjectiveSpec& spec, int k) {
  const int n = spec.ground_size();
  if (k < 1 || k > n) {
    throw InvalidSubsetError("cardinality k must lie in [1, n]");
  }
  if (!spec.is_kernel() && k < spec.term_count()) {
    throw InvalidSubsetError(
        "design objective needs k >= number of model terms");
  }
  const auto start = Clock::now();

  SearchResult result;
  std::vector<int> current;
  std::vector<bool> selected(static_cast<std::size_t>(n), false);
  double best_running = kNegInf;

  for (int step = 0; step < k; ++step) {
    int best_candidate = -1;
    double best_value = kNegInf;
    for (int c = 0; c < n; ++c) {
      if (selected[static_cast<std::size_t>(c)]) continue;
      std::vector<int> trial = current;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
      ++result.evaluations;
      const double value = growing_value(spec, trial);
      if (value > best_value) {
        best_value = value;
        best_candidate = c;
      }
    }
    if (best_candidate < 0 || best_value == kNegInf) {
      // No addition keeps the running objective defined; keep the smallest
      // unused index so the cardinality contract still holds.
      for (int c = 0; c < n; ++c) {
        if (!selected[static_cast<std::size_t>(c)]) {
          best_candidate = c;
          break;
        }
      }
      best_value = kNegInf;
    }
    selected[static_cast<std::size_t>(best_candidate)] = true;
    current.insert(
        std::upper_bound(current.begin(), current.end(), best_candidate),
        best_candidate);
    if (best_value > best_running) {
      best_running = best_value;
      result.trace.emplace_back(result.evaluations, best_value);
    }
  }

  result.best_subset = Subset::from_sorted(current);
  result.best_log_objective =
      log_objective_or_neg_inf(spec, result.best_subset);
  finish_trace(result.trace, result.evaluations, result.best_log_objective);
  result.wall_time_ms = elapsed_ms(start);
  return result;
}

SearchResult solve_greedy_backward(const ObjectiveSpec& spec, int k) {
  const int n = spec.ground_size();
  if (k < 1 || k > n) {
    throw InvalidSubsetError("cardinality k must lie in [1, n]");
  }
  const auto start = Clock::now();

  std::vector<int> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = i;

  SearchResult result;
  ++result.evaluations;
  double running = log_objective_or_neg_inf(spec, Subset::from_sorted(current));
  if (running == kNegInf) {
    throw HeuristicInapplicableError(
        "backward greedy requires the objective to be defined on the full "
        "ground set");
  }
  double best_running = running;
  result.trace.emplace_back(result.evaluations, running);

  while (static_cast<int>(current.size()) > k) {
    int best_position = -1;
    double best_value = kNegInf;
    for (std::size_t pos = 0; pos < current.size(); ++pos) {
      std::vector<int> trial = current;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
      ++result.evaluations;
      const double value = log_objective_or_neg_inf(
          spec, Subset::from_sorted(trial));
      if (value > best_value) {
        best_value = value;
        best_position = static_cast<int>(pos);
      }
    }
    if (best_value == kNegInf) {
      throw HeuristicInapplicableError(
          "objective undefined on every deletion from an intermediate set");
    }
    current.erase(current.begin() + best_position);
    running = best_value;
    if (running > best_running) {
      best_running = running;
      result.trace.emplace_back(result.evaluations, running);
    }
  }

  result.best_subset = Subset::from_sorted(current);
  result.best_log_objective = running;
  finish_trace(result.trace, result.evaluations, result.best_log_objective);
  result.wall_time_ms = elapsed_ms(start);
  return result;
}

SearchResult refine_exchange(const ObjectiveSpec& spec, const Subset& start) {
  const int n = spec.ground_size();
  Subset validated = Subset::checked(start.indices(), n);
  const auto begin = Clock::now();

  SearchResult result;
  std::vector<int> current = validated.indices();
  double value = log_objective_or_neg_inf(spec, validated);
  ++result.evaluations;
  result.trace.emplace_back(result.evaluations, value);

  std::vector<bool> member(static_cast<std::size_t>(n), false);
  for (int i : current) member[static_cast<std::size_t>(i)] = true;

  bool improved = true;
  while (improved) {
    improved = false;
    for (int candidate = 0; candidate < n && !improved; ++candidate) {
      if (member[static_cast<std::size_t>(candidate)]) continue;
      for (std::size_t pos = 0; pos < current.size() && !improved; ++pos) {
        std::vector<int> trial = current;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        trial.insert(
            std::upper_bound(trial.begin(), trial.end(), candidate),
            candidate);
        ++result.evaluations;
        const double trial_value =
            log_objective_or_neg_inf(spec, Subset::from_sorted(trial));
        if (trial_value > value + kSwapImprovementThreshold) {
          member[static_cast<std::size_t>(current[pos])] = false;
          member[static_cast<std::size_t>(candidate)] = true;
          current = std::move(trial);
          value = trial_value;
          result.trace.emplace_back(result.evaluations, value);
          improved = true;
        }
      }
    }
  }

  result.best_subset = Subset::from_sorted(current);
  result.best_log_objective = value;
  result.wall_time_ms = elapsed_ms(begin);
  return result;
}

}  // namespace subdet
