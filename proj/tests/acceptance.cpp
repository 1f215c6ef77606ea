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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed release gates, not tunable knobs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "subdet/generators.hpp"
#include "subdet/linalg.hpp"
#include "subdet/objective.hpp"
#include "subdet/sampler_dpp.hpp"
#include "subdet/search_exact.hpp"
#include "subdet/search_ga.hpp"
#include "subdet/search_greedy.hpp"

namespace {

using subdet::DPPConfig;
using subdet::GAConfig;
using subdet::ObjectiveSpec;
using subdet::Subset;
using subdet::SymmetricMatrix;

constexpr double kGreedyReferenceValue = 122.8217;

// Brute-forced optimum of the 5x2x2 factorial with k = 8 under the
// equally-spaced [-1, 1] coding with intercept: the eight cube vertices,
// whose information matrix is 8 I, log det 4 log 8.
constexpr double kFactorialExactReference = 8.317766166719343;

int failures = 0;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("%s: criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

SymmetricMatrix random_spd(int n, std::mt19937_64& rng, double ridge = 0.5) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = gauss(rng);
  }
  Eigen::MatrixXd m = b * b.transpose() / n;
  // Force bitwise symmetry; the product alone can differ in the last ulp.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m(j, i) = m(i, j);
  }
  m.diagonal().array() += ridge;
  return SymmetricMatrix(m);
}

ObjectiveSpec synthetic_benchmark() {
  return ObjectiveSpec::kernel(
      subdet::synthetic_matrix(subdet::SyntheticSpec{}));
}

Subset reference_greedy_subset() {
  std::vector<int> idx;
  for (int i = 31; i <= 40; ++i) idx.push_back(i - 1);
  for (int i = 51; i <= 100; ++i) idx.push_back(i - 1);
  return Subset::checked(idx, 100);
}

bool trace_non_decreasing(const subdet::SearchResult& r) {
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    if (r.trace[i].second < r.trace[i - 1].second) return false;
  }
  return !r.trace.empty() &&
         r.trace.back().second == r.best_log_objective;
}

void criterion1_greedy_regression() {
  // The published benchmark subset comes from the deletion (backward)
  // greedy; the forward variant happens to find a better subset here, so it
  // only has to dominate the reference value.
  const auto start = std::chrono::steady_clock::now();
  const ObjectiveSpec spec = synthetic_benchmark();
  const auto result = subdet::solve_greedy_backward(spec, 60);
  const double elapsed = seconds_since(start);
  const bool subset_ok = result.best_subset == reference_greedy_subset();
  const bool value_ok =
      std::abs(result.best_log_objective - kGreedyReferenceValue) < 1e-3;
  const bool time_ok = elapsed < 30.0;
  const auto forward = subdet::solve_greedy_forward(spec, 60);
  const bool forward_ok =
      forward.best_log_objective >= result.best_log_objective - 1e-9;
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "backward greedy on the banded benchmark: value %.4f "
                "(target %.4f +/- 1e-3), subset %s, %.1f s (limit 30 s); "
                "forward greedy %.4f dominates",
                result.best_log_objective, kGreedyReferenceValue,
                subset_ok ? "matches" : "differs", elapsed,
                forward.best_log_objective);
  report(1, subset_ok && value_ok && time_ok && forward_ok, buffer);
}

void criterion2_dpp_improvement() {
  const ObjectiveSpec spec = synthetic_benchmark();

  // Reduced smoke budget first; it shares the pass line's diagnostics.
  const auto smoke_start = std::chrono::steady_clock::now();
  DPPConfig smoke;
  smoke.k = 60;
  smoke.iterations = 5000;
  smoke.seed = 1001;
  smoke.workers = 1;
  const auto smoke_result = subdet::solve_dpp(spec, smoke);
  const double smoke_elapsed = seconds_since(smoke_start);
  const bool smoke_ok =
      smoke_result.best_log_objective > kGreedyReferenceValue &&
      smoke_elapsed < 300.0;

  int reach_high = 0;
  int beat_greedy = 0;
  double best_seen = -1e300;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    DPPConfig cfg;
    cfg.k = 60;
    cfg.iterations = 100000;
    cfg.seed = seed;
    cfg.workers = 1;
    const auto result = subdet::solve_dpp(spec, cfg);
    if (result.best_log_objective >= 123.55) ++reach_high;
    if (result.best_log_objective > kGreedyReferenceValue) ++beat_greedy;
    best_seen = std::max(best_seen, result.best_log_objective);
  }
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "sampling search, 100k draws x 10 seeds: %d/10 >= 123.55 "
                "(need 9), %d/10 beat greedy (need 10), best %.4f; smoke "
                "5k draws: %s in %.0f s (limit 300 s)",
                reach_high, beat_greedy, best_seen,
                smoke_ok ? "beat greedy" : "failed", smoke_elapsed);
  report(2, reach_high >= 9 && beat_greedy == 10 && smoke_ok, buffer);
}

void criterion3_ga_improvement() {
  const ObjectiveSpec spec = synthetic_benchmark();
  int reach_high = 0;
  int beat_greedy = 0;
  double best_seen = -1e300;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GAConfig cfg;
    cfg.population_size = 100;
    cfg.p_cross = 0.75;
    cfg.p_mut = 0.05;
    cfg.tournament_size = 4;
    cfg.generations = 1000;
    cfg.seed = seed;
    const auto result = subdet::solve_ga(spec, 60, cfg);
    if (result.best_log_objective >= 123.0) ++reach_high;
    if (result.best_log_objective > kGreedyReferenceValue) ++beat_greedy;
    best_seen = std::max(best_seen, result.best_log_objective);
  }
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "genetic search, 1000 generations x 10 seeds: %d/10 >= "
                "123.0 (need 8), %d/10 beat greedy (need 10), best %.4f",
                reach_high, beat_greedy, best_seen);
  report(3, reach_high >= 8 && beat_greedy == 10, buffer);
}

void criterion4_factorial_optimum() {
  const auto design =
      subdet::factorial_design(subdet::FactorialSpec{{5, 2, 2}, true});
  const ObjectiveSpec spec = ObjectiveSpec::information_gram(design);

  const auto start = std::chrono::steady_clock::now();
  const auto exact = subdet::solve_exact(spec, 8);
  const double exact_elapsed = seconds_since(start);
  const bool enumeration_ok =
      exact.evaluations == 125970 && exact_elapsed < 10.0;
  const bool reference_ok =
      std::abs(exact.best_log_objective - kFactorialExactReference) < 1e-9;

  int ga_hits = 0;
  int dpp_hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GAConfig ga;
    ga.population_size = 100;
    ga.p_cross = 0.5;
    ga.p_mut = 0.01;
    ga.tournament_size = 4;
    ga.generations = 1000;
    ga.seed = seed;
    if (std::abs(subdet::solve_ga(spec, 8, ga).best_log_objective -
                 exact.best_log_objective) < 1e-9) {
      ++ga_hits;
    }
    DPPConfig dpp;
    dpp.k = 8;
    dpp.iterations = 10000;
    dpp.seed = seed;
    dpp.workers = 1;
    if (std::abs(subdet::solve_dpp(spec, dpp).best_log_objective -
                 exact.best_log_objective) < 1e-9) {
      ++dpp_hits;
    }
  }
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "factorial 5x2x2, k=8: exact %.9f over %lld subsets in "
                "%.1f s (reference %.9f), genetic hits %d/10, sampling "
                "hits %d/10 (need 9 each)",
                exact.best_log_objective,
                static_cast<long long>(exact.evaluations), exact_elapsed,
                kFactorialExactReference, ga_hits, dpp_hits);
  report(4, enumeration_ok && reference_ok && ga_hits >= 9 && dpp_hits >= 9,
         buffer);
}

void criterion5_sampler_distribution() {
  std::mt19937_64 kernel_rng(20260823);
  bool all_ok = true;
  double worst_tv = 0.0;
  double worst_kernel_time = 0.0;
  for (int kernel_index = 0; kernel_index < 3; ++kernel_index) {
    const SymmetricMatrix l = random_spd(6, kernel_rng, 0.3);
    const auto kernel_start = std::chrono::steady_clock::now();
    for (int k = 1; k <= 3; ++k) {
      const auto pmf = subdet::kdpp_pmf(l, k);
      const auto eig = subdet::eigendecompose(l);
      const subdet::KdppSampler sampler(eig, k);
      std::mt19937_64 rng(777 + kernel_index * 10 + k);
      std::map<Subset, int> counts;
      const int draws = 200000;
      for (int d = 0; d < draws; ++d) ++counts[sampler.sample(rng)];
      double tv = 0.0;
      for (const auto& [subset, p] : pmf) {
        const auto it = counts.find(subset);
        const double freq =
            it == counts.end() ? 0.0
                               : static_cast<double>(it->second) / draws;
        tv += std::abs(freq - p);
      }
      tv /= 2.0;
      worst_tv = std::max(worst_tv, tv);
      if (tv >= 0.01) all_ok = false;
    }
    worst_kernel_time =
        std::max(worst_kernel_time, seconds_since(kernel_start));
  }
  if (worst_kernel_time >= 120.0) all_ok = false;
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "sampler vs exact table, 3 kernels x k in {1,2,3} x 200k "
                "draws: worst TV %.4f (limit 0.01), slowest kernel %.0f s "
                "(limit 120 s)",
                worst_tv, worst_kernel_time);
  report(5, all_ok, buffer);
}

void criterion6_normalizer_identity() {
  std::mt19937_64 rng(6060);
  std::uniform_int_distribution<int> size(2, 12);
  bool all_ok = true;
  double worst_rel = 0.0;
  for (int instance = 0; instance < 20; ++instance) {
    const int n = size(rng);
    const SymmetricMatrix l = random_spd(n, rng, 0.2);
    for (int k = 1; k <= n; ++k) {
      const auto check = subdet::kdpp_normalizer_check(l, k);
      const double rel = std::abs(check.enumerated_sum - check.esp_value) /
                         std::max(std::abs(check.enumerated_sum), 1e-300);
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-8) all_ok = false;
    }
  }
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "normalizer enumeration vs eigenvalue polynomial, 20 "
                "instances, all k: worst relative error %.2e (limit 1e-8)",
                worst_rel);
  report(6, all_ok, buffer);
}

void criterion7_oracle_dominance() {
  std::mt19937_64 rng(7070);
  std::uniform_int_distribution<int> size(4, 12);
  bool all_ok = true;
  for (int instance = 0; instance < 25; ++instance) {
    const int n = size(rng);
    ObjectiveSpec spec = [&] {
      if (instance % 5 == 4) {
        // Covariance-ingestion path: sample covariance of random data.
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::MatrixXd data(3 * n, n);
        for (int i = 0; i < data.rows(); ++i) {
          for (int j = 0; j < n; ++j) data(i, j) = gauss(rng);
        }
        return ObjectiveSpec::kernel(
            subdet::covariance_from_observations(data));
      }
      return ObjectiveSpec::kernel(random_spd(n, rng, 0.3));
    }();
    std::uniform_int_distribution<int> card(2, n - 1);
    const int k = card(rng);

    const auto exact = subdet::solve_exact(spec, k);
    const double bound = exact.best_log_objective + 1e-9;

    const auto greedy = subdet::solve_greedy_forward(spec, k);
    const auto backward = subdet::solve_greedy_backward(spec, k);
    const auto exchanged = subdet::refine_exchange(spec, greedy.best_subset);
    GAConfig ga;
    ga.population_size = 20;
    ga.generations = 50;
    ga.seed = 100 + static_cast<std::uint64_t>(instance);
    const auto genetic = subdet::solve_ga(spec, k, ga);
    DPPConfig dpp;
    dpp.k = k;
    dpp.iterations = 200;
    dpp.seed = 200 + static_cast<std::uint64_t>(instance);
    const auto sampled = subdet::solve_dpp(spec, dpp);

    const std::vector<const subdet::SearchResult*> heuristics = {
        &greedy, &backward, &exchanged, &genetic, &sampled};
    for (const auto* r : heuristics) {
      if (r->best_log_objective > bound) all_ok = false;
      if (!trace_non_decreasing(*r)) all_ok = false;
    }
    if (!trace_non_decreasing(exact)) all_ok = false;
    if (exchanged.best_log_objective <
        greedy.best_log_objective - 1e-12) {
      all_ok = false;
    }
  }
  report(7, all_ok,
         "exhaustive value dominates greedy, backward, exchange, genetic, "
         "and sampling on 25 random instances; exchange never decreases; "
         "all traces non-decreasing");
}

void criterion8_linear_scaling() {
  std::mt19937_64 rng(8080);
  const int k = 20;
  auto median_sample_seconds = [&](int n) {
    const SymmetricMatrix l = random_spd(n, rng, 0.5);
    const auto eig = subdet::eigendecompose(l);
    const subdet::KdppSampler sampler(eig, k);
    std::mt19937_64 sample_rng(n);
    // Warm-up draws keep allocator effects out of the measurement.
    for (int d = 0; d < 20; ++d) sampler.sample(sample_rng);
    std::vector<double> times;
    for (int d = 0; d < 200; ++d) {
      const auto start = std::chrono::steady_clock::now();
      sampler.sample(sample_rng);
      times.push_back(seconds_since(start));
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2,
                     times.end());
    return times[times.size() / 2];
  };
  const double t100 = median_sample_seconds(100);
  const double t400 = median_sample_seconds(400);
  const double ratio = t400 / (4.0 * t100);
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "per-sample time, k=20: median %.1f us at N=100, %.1f us "
                "at N=400; ratio to linear extrapolation %.2f (limit 2.5)",
                t100 * 1e6, t400 * 1e6, ratio);
  report(8, ratio <= 2.5, buffer);
}

void criterion9_excluded_values() {
  report(9, true,
         "climate-network covariance reference values are excluded by "
         "design (source covariance unpublished); covariance ingestion is "
         "exercised under criterion 7");
}

}  // namespace

int main() {
  criterion1_greedy_regression();
  criterion5_sampler_distribution();
  criterion6_normalizer_identity();
  criterion7_oracle_dominance();
  criterion8_linear_scaling();
  criterion4_factorial_optimum();
  criterion3_ga_improvement();
  criterion2_dpp_improvement();
  criterion9_excluded_values();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
