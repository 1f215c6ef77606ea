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

#include "subdet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace subdet {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) {
    // Trim surrounding whitespace.
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string()
                         : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool parse_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

// Parses a numeric CSV, skipping one optional header row.
std::vector<std::vector<double>> parse_numeric_csv(const std::string& path,
                                                   bool reject_missing) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open CSV file: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  bool first_line = true;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    std::vector<double> row;
    row.reserve(fields.size());
    bool numeric = true;
    for (const std::string& field : fields) {
      double value;
      if (!parse_double(field, value)) {
        numeric = false;
        break;
      }
      row.push_back(value);
    }
    if (!numeric) {
      if (first_line) {
        first_line = false;
        continue;  // header row
      }
      if (reject_missing) {
        throw InsufficientDataError("row " + std::to_string(line_number) +
                                    " of " + path +
                                    " has missing or non-numeric entries");
      }
      throw ConfigError("non-numeric entry on line " +
                        std::to_string(line_number) + " of " + path);
    }
    first_line = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ConfigError("ragged CSV: line " + std::to_string(line_number) +
                        " of " + path + " has " +
                        std::to_string(row.size()) + " fields");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("CSV file has no data rows: " + path);
  return rows;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

}  // namespace

Eigen::MatrixXd load_csv_matrix(const std::string& path) {
  return to_matrix(parse_numeric_csv(path, /*reject_missing=*/false));
}

SymmetricMatrix load_matrix_csv(const std::string& path) {
  const Eigen::MatrixXd m = load_csv_matrix(path);
  if (m.rows() != m.cols()) {
    throw ConfigError("kernel CSV must be square, got " +
                      std::to_string(m.rows()) + " x " +
                      std::to_string(m.cols()));
  }
  return SymmetricMatrix::from_dense(m, 1e-9);
}

DesignMatrix load_design_csv(const std::string& path) {
  return load_csv_matrix(path);
}

Eigen::MatrixXd load_observations_csv(const std::string& path) {
  const Eigen::MatrixXd data =
      to_matrix(parse_numeric_csv(path, /*reject_missing=*/true));
  if (!data.allFinite()) {
    throw InsufficientDataError("observations contain non-finite values");
  }
  return data;
}

void save_csv_matrix(const std::string& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write CSV file: " + path);
  char buffer[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", m(i, j));
      out << buffer;
      if (j + 1 < m.cols()) out << ',';
    }
    out << '\n';
  }
}

void write_trace_csv(const std::string& path,
                     const std::vector<std::pair<std::int64_t, double>>&
                         trace) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write trace file: " + path);
  out << "iteration,best_log_objective\n";
  char buffer[64];
  for (const auto& [iteration, value] : trace) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out << iteration << ',' << buffer << '\n';
  }
}

}  // namespace subdet
