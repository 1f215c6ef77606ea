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

#ifndef SUBDET_SAMPLER_DPP_HPP
#define SUBDET_SAMPLER_DPP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "subdet/objective.hpp"
#include "subdet/types.hpp"

namespace subdet {

// Table of elementary symmetric polynomials over eigenvalue prefixes:
// at(k, n) = e_k(lambda_1..lambda_n). Satisfies
//   at(0, n) = 1,  at(k, n) = 0 for k > n,
//   at(k, n) = at(k, n-1) + lambda_n * at(k-1, n-1).
class ElementarySymmetricTable {
 public:
  ElementarySymmetricTable(const std::vector<double>& lambda, int k_max);

  double at(int k, int n) const { return values_[index(k, n)]; }
  int k_max() const { return k_max_; }
  int n_max() const { return n_max_; }

 private:
  std::size_t index(int k, int n) const {
    return static_cast<std::size_t>(k) * (n_max_ + 1) + n;
  }
  int k_max_;
  int n_max_;
  std::vector<double> values_;
};

// Builds the table after validating nonnegativity of the eigenvalues
// (entries below -1e-10 * max lambda raise InvalidKernelError; smaller
// negatives are clamped to zero).
ElementarySymmetricTable elementary_symmetric(
    const std::vector<double>& lambda, int k_max);

// Exact fixed-size determinantal sampler. Phase 1 picks k eigenvector
// indices from the elementary-symmetric mixture weights; phase 2 samples one
// ground-set element per step from the squared row norms of the current
// orthonormal basis, then projects the chosen coordinate axis out of the
// basis. Eigenvalues are rescaled by 1/max lambda before the table is built;
// the phase-1 acceptance ratios are invariant under that rescaling.
class KdppSampler {
 public:
  // eig must come from a PSD kernel; requires k <= number of positive
  // eigenvalues.
  KdppSampler(EigenDecomposition eig, int k);

  // One exact draw; consumes the rng stream deterministically.
  Subset sample(std::mt19937_64& rng) const;

  int cardinality() const { return k_; }
  const EigenDecomposition& eigendecomposition() const { return eig_; }

 private:
  std::vector<int> sample_eigenvector_set(std::mt19937_64& rng) const;
  std::vector<int> sample_items(const std::vector<int>& chosen,
                                std::mt19937_64& rng, bool robust) const;

  EigenDecomposition eig_;
  int k_;
  ElementarySymmetricTable table_;
};

// Convenience wrapper constructing a sampler for a single draw.
Subset sample_kdpp(const EigenDecomposition& eig, int k,
                   std::mt19937_64& rng);

// Best-of-M stochastic optimizer configuration. projection_share is the
// fraction of draws taken from the modal mixture component, the projection
// DPP on the top-k eigenspace; the remainder are exact k-DPP draws, which
// keep every subset in the support.
struct DPPConfig {
  int k = 1;
  std::int64_t iterations = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  double projection_share = 0.5;
};

// Best-of-M search: draws cfg.iterations samples from a mixture of the
// exact k-DPP of the kernel of `spec` and its modal projection component,
// evaluates each, and returns the best subset seen. Design-flavor
// objectives sample from a Gaussian similarity kernel over the candidate
// rows (median-bandwidth, full rank, so any k up to n is feasible) while
// the true Gram objective is evaluated. The sample budget is split into
// contiguous chunks across workers; worker w draws from an independent
// stream derived from (seed, w), so results are reproducible for a fixed
// (seed, workers) pair.
SearchResult solve_dpp(const ObjectiveSpec& spec, const DPPConfig& cfg);

}  // namespace subdet

#endif  // SUBDET_SAMPLER_DPP_HPP
