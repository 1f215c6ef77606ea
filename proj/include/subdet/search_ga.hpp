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

#ifndef SUBDET_SEARCH_GA_HPP
#define SUBDET_SEARCH_GA_HPP

#include <cstdint>
#include <random>

#include "subdet/objective.hpp"
#include "subdet/types.hpp"

namespace subdet {

// Genetic-algorithm tuning knobs. Proportions are of the population size.
struct GAConfig {
  int population_size = 100;
  double p_cross = 0.5;       // share of the population entering crossover
  double p_mutprop = 0.2;     // share of the population copied and mutated
  double p_mut = 0.01;        // per-member swap probability inside a mutant
  double elite_fraction = 0.1;
  int tournament_size = 4;
  int generations = 1000;
  std::uint64_t seed = 0;
};

// A fixed-cardinality subset with its cached fitness (log objective, or
// -infinity when undefined).
struct Individual {
  Subset subset;
  double fitness = 0.0;
};

// Crossover preserving cardinality: shared elements are kept by both
// children and the symmetric difference is dealt randomly, each child
// receiving exactly k - |a ∩ b| of it.
std::pair<Individual, Individual> crossover_pair(const Individual& a,
                                                 const Individual& b, int k,
                                                 std::mt19937_64& rng);

// Each member independently swaps with a uniformly random non-member with
// probability p_mut. Cardinality is preserved; with k = n this is the
// identity. Fitness of the returned individual is NOT recomputed.
Individual mutate(const Individual& ind, double p_mut, std::mt19937_64& rng,
                  int n);

// Runs cfg.generations iterations of crossover, mutation, and elitist
// selection over the augmented population; returns the best individual ever
// seen. Fully reproducible from cfg.seed. The trace records the best-so-far
// value per generation.
SearchResult solve_ga(const ObjectiveSpec& spec, int k, const GAConfig& cfg);

}  // namespace subdet

#endif  // SUBDET_SEARCH_GA_HPP
