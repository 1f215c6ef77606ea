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

#include "subdet/sampler_dpp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "subdet/linalg.hpp"

namespace subdet {

namespace {

constexpr double kNegativeEigenvalueTolerance = 1e-10;
constexpr double kProbabilitySumTolerance = 1e-8;
constexpr double kDependentBasisTolerance = 1e-10;

// Internal signal that the fast phase-2 path lost orthonormality; the caller
// resamples once on the robust path before giving up.
struct BasisDrift {};

double uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Modified Gram-Schmidt with one re-orthogonalization pass; columns whose
// residual norm falls below kDependentBasisTolerance are dropped.
void orthonormalize_columns(Eigen::MatrixXd& v, int& cols) {
  int kept = 0;
  for (int j = 0; j < cols; ++j) {
    Eigen::VectorXd w = v.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < kept; ++i) {
        w -= v.col(i).dot(w) * v.col(i);
      }
    }
    const double norm = w.norm();
    if (norm < kDependentBasisTolerance) continue;
    v.col(kept) = w / norm;
    ++kept;
  }
  cols = kept;
}

}  // namespace

ElementarySymmetricTable::ElementarySymmetricTable(
    const std::vector<double>& lambda, int k_max)
    : k_max_(k_max), n_max_(static_cast<int>(lambda.size())) {
  values_.assign(static_cast<std::size_t>(k_max_ + 1) * (n_max_ + 1), 0.0);
  for (int n = 0; n <= n_max_; ++n) values_[index(0, n)] = 1.0;
  for (int n = 1; n <= n_max_; ++n) {
    const double lam = lambda[static_cast<std::size_t>(n - 1)];
    for (int k = 1; k <= k_max_; ++k) {
      values_[index(k, n)] =
          values_[index(k, n - 1)] + lam * values_[index(k - 1, n - 1)];
    }
  }
}

ElementarySymmetricTable elementary_symmetric(
    const std::vector<double>& lambda, int k_max) {
  if (k_max < 0 || k_max > static_cast<int>(lambda.size())) {
    throw ConfigError("k_max must lie in [0, length of lambda]");
  }
  double max_lambda = 0.0;
  for (double lam : lambda) max_lambda = std::max(max_lambda, lam);
  std::vector<double> clamped = lambda;
  for (double& lam : clamped) {
    if (lam < -kNegativeEigenvalueTolerance * std::max(max_lambda, 1.0)) {
      throw InvalidKernelError("kernel has a negative eigenvalue: " +
                               std::to_string(lam));
    }
    lam = std::max(lam, 0.0);
  }
  return ElementarySymmetricTable(clamped, k_max);
}

KdppSampler::KdppSampler(EigenDecomposition eig, int k)
    : eig_(std::move(eig)),
      k_(k),
      table_({},
             0) {
  const int n = static_cast<int>(eig_.values.size());
  if (k_ < 1 || k_ > n) {
    throw ConfigError("cardinality k must lie in [1, n]");
  }
  double max_lambda = eig_.values.maxCoeff();
  if (max_lambda <= 0.0) {
    throw InvalidKernelError("kernel has no positive eigenvalue");
  }
  // Rescale by 1/max lambda so the table cannot overflow; the phase-1
  // acceptance ratios are homogeneous of degree zero in the eigenvalues.
  std::vector<double> scaled(static_cast<std::size_t>(n));
  int positive = 0;
  for (int i = 0; i < n; ++i) {
    const double lam = eig_.values[i];
    if (lam < -kNegativeEigenvalueTolerance * max_lambda) {
      throw InvalidKernelError("kernel has a negative eigenvalue: " +
                               std::to_string(lam));
    }
    scaled[static_cast<std::size_t>(i)] = std::max(lam, 0.0) / max_lambda;
    if (lam > 0.0) ++positive;
  }
  if (k_ > positive) {
    throw InvalidKernelError("requested cardinality " + std::to_string(k_) +
                             " exceeds kernel rank " +
                             std::to_string(positive));
  }
  table_ = ElementarySymmetricTable(scaled, k_);
  // Only acceptance ratios are read downstream, so the sampler stores the
  // rescaled spectrum.
  eig_.values /= max_lambda;
}

std::vector<int> KdppSampler::sample_eigenvector_set(
    std::mt19937_64& rng) const {
  const int n = static_cast<int>(eig_.values.size());
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k_));
  int remaining = k_;
  for (int m = n; m >= 1 && remaining > 0; --m) {
    const double u = uniform01(rng);
    double ratio;
    if (m == remaining) {
      ratio = 1.0;  // all remaining eigenvectors are forced
    } else {
      const double denom = table_.at(remaining, m);
      ratio = denom > 0.0
                  ? eig_.values[m - 1] * table_.at(remaining - 1, m - 1) /
                        denom
                  : 1.0;
    }
    if (u < ratio) {
      chosen.push_back(m - 1);
      --remaining;
    }
  }
  if (remaining != 0) {
    throw NumericalFailureError("eigenvector selection exhausted the "
                                "spectrum before reaching cardinality k");
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<int> KdppSampler::sample_items(const std::vector<int>& chosen,
                                           std::mt19937_64& rng,
                                           bool robust) const {
  const int n = static_cast<int>(eig_.vectors.rows());
  int m = static_cast<int>(chosen.size());
  Eigen::MatrixXd v(n, m);
  for (int j = 0; j < m; ++j) v.col(j) = eig_.vectors.col(chosen[j]);

  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(m));
  while (m > 0) {
    const Eigen::VectorXd row_norms = v.leftCols(m).rowwise().squaredNorm();
    const double total = row_norms.sum();
    // Each basis vector is unit norm, so the squared entries sum to m.
    if (std::abs(total - m) > kProbabilitySumTolerance * m) {
      throw BasisDrift{};
    }

    const double u = uniform01(rng) * total;
    double cumulative = 0.0;
    int item = n - 1;
    for (int i = 0; i < n; ++i) {
      cumulative += row_norms[i];
      if (u < cumulative) {
        item = i;
        break;
      }
    }
    if (std::find(picked.begin(), picked.end(), item) != picked.end()) {
      throw BasisDrift{};
    }
    picked.push_back(item);
    if (m == 1) break;

    // Pivot on the column with the largest coordinate along the chosen axis
    // and eliminate that coordinate from the others.
    int pivot = 0;
    double pivot_abs = -1.0;
    for (int j = 0; j < m; ++j) {
      const double a = std::abs(v(item, j));
      if (a > pivot_abs) {
        pivot_abs = a;
        pivot = j;
      }
    }
    if (pivot_abs < 1e-14) throw BasisDrift{};
    v.col(pivot).swap(v.col(m - 1));

    const Eigen::VectorXd coeff =
        v.row(item).head(m - 1).transpose() / v(item, m - 1);
    v.leftCols(m - 1).noalias() -= v.col(m - 1) * coeff.transpose();
    --m;

    if (robust) {
      orthonormalize_columns(v, m);
    } else {
      // After elimination the Gram matrix is exactly I + c c^T, so the
      // closed-form inverse square root re-orthonormalizes in O(n m).
      const double c2 = coeff.squaredNorm();
      const double beta =
          c2 > 1e-12 ? (1.0 - 1.0 / std::sqrt(1.0 + c2)) / c2 : 0.5;
      const Eigen::VectorXd w = v.leftCols(m) * coeff;
      v.leftCols(m).noalias() -= beta * w * coeff.transpose();
    }
  }

  std::sort(picked.begin(), picked.end());
  return picked;
}

Subset KdppSampler::sample(std::mt19937_64& rng) const {
  const std::vector<int> chosen = sample_eigenvector_set(rng);
  try {
    return Subset::from_sorted(sample_items(chosen, rng, /*robust=*/false));
  } catch (const BasisDrift&) {
    // Resample once on the slower Gram-Schmidt path, then give up.
    try {
      const std::vector<int> again = sample_eigenvector_set(rng);
      return Subset::from_sorted(sample_items(again, rng, /*robust=*/true));
    } catch (const BasisDrift&) {
      throw NumericalFailureError(
          "item-selection probabilities drifted beyond tolerance twice; "
          "the eigenvector basis lost orthonormality");
    }
  }
}

Subset sample_kdpp(const EigenDecomposition& eig, int k,
                   std::mt19937_64& rng) {
  KdppSampler sampler(eig, k);
  return sampler.sample(rng);
}

namespace {

// Sampling kernel for a design objective: a Gaussian similarity kernel over
// the candidate rows with the median squared distance as bandwidth. The true
// Gram objective is still what gets evaluated; the similarity kernel only
// biases draws toward well-spread candidate sets and is full rank, so every
// cardinality up to n stays feasible, including k above the model rank. A
// tiny ridge guards against duplicate rows.
SymmetricMatrix design_sampling_kernel(const DesignMatrix& x) {
  const int n = static_cast<int>(x.rows());
  Eigen::MatrixXd d2(n, n);
  std::vector<double> off_diagonal;
  off_diagonal.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    d2(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double dist2 = (x.row(i) - x.row(j)).squaredNorm();
      d2(i, j) = dist2;
      d2(j, i) = dist2;
      off_diagonal.push_back(dist2);
    }
  }
  double bandwidth = 1.0;
  if (!off_diagonal.empty()) {
    const std::size_t mid = off_diagonal.size() / 2;
    std::nth_element(off_diagonal.begin(), off_diagonal.begin() + mid,
                     off_diagonal.end());
    if (off_diagonal[mid] > 0.0) bandwidth = off_diagonal[mid];
  }
  Eigen::MatrixXd kernel =
      (-d2.array() / (2.0 * bandwidth)).exp().matrix();
  kernel.diagonal().array() += 1e-8;
  return SymmetricMatrix(std::move(kernel));
}

}  // namespace

SearchResult solve_dpp(const ObjectiveSpec& spec, const DPPConfig& cfg) {
  if (cfg.iterations < 1) throw ConfigError("iteration budget must be >= 1");
  if (cfg.workers < 1) throw ConfigError("worker count must be >= 1");
  if (cfg.projection_share < 0.0 || cfg.projection_share > 1.0) {
    throw ConfigError("projection share must lie in [0, 1]");
  }

  const auto start = std::chrono::steady_clock::now();
  const SymmetricMatrix sampling_kernel =
      spec.is_kernel() ? spec.kernel_matrix()
                       : design_sampling_kernel(spec.design());
  const EigenDecomposition eig = eigendecompose(sampling_kernel);
  const KdppSampler sampler(eig, cfg.k);

  // Modal mixture component: the projection DPP on the top-k eigenspace
  // (eigenvalues ascending, so the top block is the tail).
  EigenDecomposition projected = eig;
  const int n_eig = static_cast<int>(projected.values.size());
  for (int i = 0; i < n_eig; ++i) {
    projected.values[i] = i >= n_eig - cfg.k ? 1.0 : 0.0;
  }
  const KdppSampler projection_sampler(std::move(projected), cfg.k);

  struct WorkerState {
    std::vector<double> values;  // per-iteration objective, NaN when skipped
    Subset best_subset;
    double best_value = -std::numeric_limits<double>::infinity();
  };

  const int workers =
      static_cast<int>(std::min<std::int64_t>(cfg.workers, cfg.iterations));
  std::vector<WorkerState> states(static_cast<std::size_t>(workers));
  const std::int64_t chunk = cfg.iterations / workers;
  const std::int64_t extra = cfg.iterations % workers;

  auto run_worker = [&](int w) {
    WorkerState& state = states[static_cast<std::size_t>(w)];
    const std::int64_t count = chunk + (w < extra ? 1 : 0);
    state.values.assign(static_cast<std::size_t>(count),
                        std::numeric_limits<double>::quiet_NaN());
    std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(w)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::int64_t i = 0; i < count; ++i) {
      Subset s;
      double value;
      try {
        const bool exploit = coin(rng) < cfg.projection_share;
        s = exploit ? projection_sampler.sample(rng) : sampler.sample(rng);
        value = log_objective(spec, s);
      } catch (const NumericalFailureError&) {
        continue;  // degenerate draw still consumes its iteration
      } catch (const ObjectiveUndefinedError&) {
        continue;
      }
      state.values[static_cast<std::size_t>(i)] = value;
      if (value > state.best_value ||
          (value == state.best_value && s < state.best_subset)) {
        state.best_value = value;
        state.best_subset = s;
      }
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  result.seed = cfg.seed;
  result.evaluations = cfg.iterations;
  result.best_log_objective = -std::numeric_limits<double>::infinity();
  for (const WorkerState& state : states) {
    if (state.best_subset.empty()) continue;
    if (state.best_value > result.best_log_objective ||
        (state.best_value == result.best_log_objective &&
         state.best_subset < result.best_subset)) {
      result.best_log_objective = state.best_value;
      result.best_subset = state.best_subset;
    }
  }
  if (result.best_subset.empty()) {
    throw NumericalFailureError("every sample in the budget was degenerate");
  }

  // Best-so-far improvements in global iteration order (worker chunks are
  // contiguous, so this is independent of interleaving).
  double best = -std::numeric_limits<double>::infinity();
  std::int64_t iteration = 0;
  for (const WorkerState& state : states) {
    for (double value : state.values) {
      ++iteration;
      if (std::isnan(value)) continue;
      if (value > best) {
        best = value;
        result.trace.emplace_back(iteration, value);
      }
    }
  }

  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace subdet
