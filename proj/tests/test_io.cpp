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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "subdet/generator_spec.hpp"
#include "subdet/io.hpp"
#include "test_util.hpp"

using subdet::GeneratorSpec;

namespace {

// Unique scratch file removed on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("subdet_io_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + ".csv"))
                .string();
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("plain numeric CSV loads as a dense matrix") {
  const TempFile file("1,2\n3,4\n5,6\n");
  const Eigen::MatrixXd m = subdet::load_csv_matrix(file.path());
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(2, 1) == 6.0);
}

TEST_CASE("a leading header row is detected and skipped") {
  const TempFile file("x1,x2\n1.5,2.5\n-3,0\n");
  const Eigen::MatrixXd m = subdet::load_csv_matrix(file.path());
  REQUIRE(m.rows() == 2);
  CHECK(m(0, 0) == 1.5);
  CHECK(m(1, 0) == -3.0);
}

TEST_CASE("writer and loader round-trip at full precision") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(-10, 10);
  Eigen::MatrixXd m(4, 3);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = unif(rng);
  }
  const TempFile file("");
  subdet::save_csv_matrix(file.path(), m);
  const Eigen::MatrixXd back = subdet::load_csv_matrix(file.path());
  REQUIRE(back.rows() == 4);
  REQUIRE(back.cols() == 3);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kernel loader rejects non-square input") {
  const TempFile file("1,0,0\n0,1,0\n");
  CHECK_THROWS_AS(subdet::load_matrix_csv(file.path()), subdet::Error);
}

TEST_CASE("kernel loader rejects asymmetry beyond tolerance") {
  const TempFile file("1,0.5\n0.7,1\n");
  CHECK_THROWS_AS(subdet::load_matrix_csv(file.path()), subdet::ConfigError);
}

TEST_CASE("kernel loader averages roundoff-scale asymmetry") {
  const TempFile file("1,0.5\n0.5000000001,1\n");
  const auto m = subdet::load_matrix_csv(file.path());
  CHECK(m(0, 1) == doctest::Approx(0.50000000005).epsilon(1e-12));
  CHECK(m(0, 1) == m(1, 0));
}

TEST_CASE("observation loader rejects missing entries") {
  const TempFile file("1,2,3\n4,,6\n");
  CHECK_THROWS_AS(subdet::load_observations_csv(file.path()),
                  subdet::InsufficientDataError);
}

TEST_CASE("ragged rows are rejected") {
  const TempFile file("1,2,3\n4,5\n");
  CHECK_THROWS_AS(subdet::load_csv_matrix(file.path()), subdet::ConfigError);
}

TEST_CASE("missing files raise a subdet error") {
  CHECK_THROWS_AS(subdet::load_csv_matrix("/nonexistent/path.csv"),
                  subdet::Error);
}

TEST_CASE("trace CSV has a header and one row per improvement") {
  const TempFile file("");
  subdet::write_trace_csv(file.path(), {{1, -2.5}, {7, 0.25}});
  std::ifstream in(file.path());
  std::string line;
  std::getline(in, line);
  CHECK(line == "iteration,best_log_objective");
  std::getline(in, line);
  CHECK(line.rfind("1,", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("7,", 0) == 0);
  CHECK(!std::getline(in, line));
}

TEST_CASE("synthetic generator spec parses overrides") {
  const GeneratorSpec spec =
      subdet::parse_generator_spec("synthetic:n=40,k=15,delta=0.5");
  CHECK(spec.kind == GeneratorSpec::Kind::kSynthetic);
  CHECK(spec.synthetic.n == 40);
  CHECK(spec.synthetic.k == 15);
  CHECK(spec.synthetic.delta == 0.5);
  // Untouched fields keep their defaults.
  CHECK(spec.synthetic.a == 0.2);
}

TEST_CASE("factorial generator spec parses level lists") {
  const GeneratorSpec spec =
      subdet::parse_generator_spec("factorial:levels=5,2,2");
  CHECK(spec.kind == GeneratorSpec::Kind::kFactorial);
  REQUIRE(spec.factorial.levels.size() == 3);
  CHECK(spec.factorial.levels[0] == 5);
  CHECK(spec.factorial.levels[1] == 2);
  CHECK(spec.factorial.levels[2] == 2);
  CHECK(spec.factorial.intercept);

  const GeneratorSpec no_intercept =
      subdet::parse_generator_spec("factorial:levels=3,3,intercept=0");
  REQUIRE(no_intercept.factorial.levels.size() == 2);
  CHECK(!no_intercept.factorial.intercept);
}

TEST_CASE("covariance generator spec carries the file path") {
  const GeneratorSpec spec =
      subdet::parse_generator_spec("covariance-from:/data/obs.csv");
  CHECK(spec.kind == GeneratorSpec::Kind::kCovariance);
  CHECK(spec.covariance_path == "/data/obs.csv");
}

TEST_CASE("generator spec parsing rejects malformed input") {
  CHECK_THROWS_AS(subdet::parse_generator_spec("unknown:n=3"),
                  subdet::ConfigError);
  CHECK_THROWS_AS(subdet::parse_generator_spec("synthetic:bogus=1"),
                  subdet::ConfigError);
  CHECK_THROWS_AS(subdet::parse_generator_spec("synthetic:n=abc"),
                  subdet::ConfigError);
  CHECK_THROWS_AS(subdet::parse_generator_spec("covariance-from:"),
                  subdet::ConfigError);
}
