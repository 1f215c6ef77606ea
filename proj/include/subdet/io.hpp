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

#ifndef SUBDET_IO_HPP
#define SUBDET_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subdet/objective.hpp"
#include "subdet/types.hpp"

namespace subdet {

// Numeric CSV parsed into a dense matrix. A single leading header row is
// detected by a non-numeric first token and skipped.
Eigen::MatrixXd load_csv_matrix(const std::string& path);

// n x n kernel CSV; symmetry validated with tolerance 1e-9 and then
// symmetrized by averaging.
SymmetricMatrix load_matrix_csv(const std::string& path);

// n x p design CSV (no symmetry requirement).
DesignMatrix load_design_csv(const std::string& path);

// Observation CSV (rows = time points, columns = variables); rows with
// missing entries are rejected at ingest.
Eigen::MatrixXd load_observations_csv(const std::string& path);

// Full-precision numeric CSV writers (round-trip safe).
void save_csv_matrix(const std::string& path, const Eigen::MatrixXd& m);

// Trace CSV with columns (iteration, best_log_objective).
void write_trace_csv(const std::string& path,
                     const std::vector<std::pair<std::int64_t, double>>&
                         trace);

}  // namespace subdet

#endif  // SUBDET_IO_HPP
