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

#include "subdet/search_ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace subdet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void validate(const GAConfig& cfg, int k, int n) {
  if (k < 1 || k > n) {
    throw InvalidSubsetError("cardinality k must lie in [1, n]");
  }
  if (cfg.population_size < 1) throw ConfigError("population size must be >= 1");
  auto proportion = [](double p, const char* name) {
    if (p < 0.0 || p > 1.0) {
      throw ConfigError(std::string(name) + " must lie in [0, 1]");
    }
  };
  proportion(cfg.p_cross, "p_cross");
  proportion(cfg.p_mutprop, "p_mutprop");
  proportion(cfg.p_mut, "p_mut");
  proportion(cfg.elite_fraction, "elite_fraction");
  if (cfg.tournament_size < 2) throw ConfigError("tournament size must be >= 2");
  if (cfg.generations < 1) throw ConfigError("generations must be >= 1");
}

// Uniform random k-subset of {0, ..., n-1} via partial Fisher-Yates.
std::vector<int> random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(pick(rng))]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + k);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Index of the fittest of `size` individuals drawn with replacement.
std::size_t tournament(const std::vector<Individual>& pool, int size,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t best = pick(rng);
  for (int i = 1; i < size; ++i) {
    const std::size_t contender = pick(rng);
    if (pool[contender].fitness > pool[best].fitness) best = contender;
  }
  return best;
}

}  // namespace

std::pair<Individual, Individual> crossover_pair(const Individual& a,
                                                 const Individual& b, int k,
                                                 std::mt19937_64& rng) {
  if (a.subset.size() != k || b.subset.size() != k) {
    throw InvalidSubsetError("crossover parents must both have cardinality k");
  }
  const auto& ia = a.subset.indices();
  const auto& ib = b.subset.indices();
  std::vector<int> shared;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                        std::back_inserter(shared));
  std::vector<int> diff;
  std::set_symmetric_difference(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                std::back_inserter(diff));
  std::shuffle(diff.begin(), diff.end(), rng);

  const std::size_t need = static_cast<std::size_t>(k) - shared.size();
  std::vector<int> first(shared);
  first.insert(first.end(), diff.begin(),
               diff.begin() + static_cast<std::ptrdiff_t>(need));
  std::vector<int> second(shared);
  second.insert(second.end(), diff.begin() + static_cast<std::ptrdiff_t>(need),
                diff.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {Individual{Subset::from_sorted(std::move(first)), kNegInf},
          Individual{Subset::from_sorted(std::move(second)), kNegInf}};
}

Individual mutate(const Individual& ind, double p_mut, std::mt19937_64& rng,
                  int n) {
  const std::vector<int> original = ind.subset.indices();
  const int k = static_cast<int>(original.size());
  if (k == n || p_mut <= 0.0) return ind;

  std::vector<int> current = original;
  std::vector<bool> member(static_cast<std::size_t>(n), false);
  for (int i : current) member[static_cast<std::size_t>(i)] = true;
  std::vector<int> outside;
  outside.reserve(static_cast<std::size_t>(n - k));
  for (int i = 0; i < n; ++i) {
    if (!member[static_cast<std::size_t>(i)]) outside.push_back(i);
  }

  std::bernoulli_distribution flip(p_mut);
  bool changed = false;
  for (int site : original) {
    if (!flip(rng)) continue;
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    const std::size_t slot = pick(rng);
    const int replacement = outside[slot];
    outside[slot] = site;  // the leaving member becomes available again
    *std::find(current.begin(), current.end(), site) = replacement;
    changed = true;
  }
  if (!changed) return ind;

  std::sort(current.begin(), current.end());
  return Individual{Subset::from_sorted(std::move(current)), kNegInf};
}

SearchResult solve_ga(const ObjectiveSpec& spec, int k, const GAConfig& cfg) {
  const int n = spec.ground_size();
  validate(cfg, k, n);
  const auto start = std::chrono::steady_clock::now();

  std::mt19937_64 rng(cfg.seed);
  SearchResult result;
  result.seed = cfg.seed;

  auto evaluate = [&](Individual& ind) {
    ind.fitness = log_objective_or_neg_inf(spec, ind.subset);
    ++result.evaluations;
  };

  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(cfg.population_size));
  for (int i = 0; i < cfg.population_size; ++i) {
    Individual ind{Subset::from_sorted(random_subset(n, k, rng)), kNegInf};
    evaluate(ind);
    population.push_back(std::move(ind));
  }

  Individual best = *std::max_element(
      population.begin(), population.end(),
      [](const Individual& a, const Individual& b) {
        return a.fitness < b.fitness ||
               (a.fitness == b.fitness && b.subset < a.subset);
      });

  const int n_cross =
      static_cast<int>(std::lround(cfg.p_cross * cfg.population_size));
  const int n_mut =
      static_cast<int>(std::lround(cfg.p_mutprop * cfg.population_size));
  const int n_elite = std::max(
      1, static_cast<int>(std::lround(cfg.elite_fraction *
                                      cfg.population_size)));

  for (int gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<Individual> augmented = population;

    // Crossover: tournament-select n_cross parents, pair them at random.
    std::vector<std::size_t> parents;
    parents.reserve(static_cast<std::size_t>(n_cross));
    for (int i = 0; i < n_cross; ++i) {
      parents.push_back(tournament(population, cfg.tournament_size, rng));
    }
    std::shuffle(parents.begin(), parents.end(), rng);
    for (std::size_t i = 0; i + 1 < parents.size(); i += 2) {
      auto [child_a, child_b] = crossover_pair(
          population[parents[i]], population[parents[i + 1]], k, rng);
      evaluate(child_a);
      evaluate(child_b);
      augmented.push_back(std::move(child_a));
      augmented.push_back(std::move(child_b));
    }

    // Mutation: n_mut individuals chosen uniformly, mutated copies appended.
    std::uniform_int_distribution<std::size_t> any(0, population.size() - 1);
    for (int i = 0; i < n_mut; ++i) {
      Individual mutant = mutate(population[any(rng)], cfg.p_mut, rng, n);
      evaluate(mutant);
      augmented.push_back(std::move(mutant));
    }

    // Selection: elites pass directly, the rest by tournament over the
    // augmented population.
    std::vector<std::size_t> order(augmented.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       if (augmented[a].fitness != augmented[b].fitness) {
                         return augmented[a].fitness > augmented[b].fitness;
                       }
                       return augmented[a].subset < augmented[b].subset;
                     });
    std::vector<Individual> next;
    next.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < n_elite && i < static_cast<int>(order.size()); ++i) {
      next.push_back(augmented[order[static_cast<std::size_t>(i)]]);
    }
    while (static_cast<int>(next.size()) < cfg.population_size) {
      next.push_back(augmented[tournament(augmented, cfg.tournament_size,
                                          rng)]);
    }
    population = std::move(next);

    for (const Individual& ind : population) {
      if (ind.fitness > best.fitness ||
          (ind.fitness == best.fitness && ind.subset < best.subset)) {
        best = ind;
      }
    }
    result.trace.emplace_back(gen, best.fitness);
  }

  result.best_subset = best.subset;
  result.best_log_objective = best.fitness;
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace subdet
