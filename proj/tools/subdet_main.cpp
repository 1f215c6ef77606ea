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

// Command-line front end: load or generate an instance, run a solver, emit
// a structured run record and optionally the best-so-far trace.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "subdet/generator_spec.hpp"
#include "subdet/generators.hpp"
#include "subdet/io.hpp"
#include "subdet/linalg.hpp"
#include "subdet/objective.hpp"
#include "subdet/sampler_dpp.hpp"
#include "subdet/search_exact.hpp"
#include "subdet/search_ga.hpp"
#include "subdet/search_greedy.hpp"

namespace {

using json = nlohmann::ordered_json;

int default_workers() {
  if (const char* env = std::getenv("SUBDET_WORKERS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SolveOptions {
  std::string method;
  std::string matrix_path;
  std::string design_path;
  std::string generate_spec;
  int k = 0;
  std::int64_t guard = subdet::kDefaultEnumerationGuard;
  std::uint64_t seed = 0;
  std::int64_t iterations = 10000;
  double projection_share = 0.5;
  int workers = 0;
  subdet::GAConfig ga;
  std::string ga_config_path;
  std::string format = "json";
  std::string trace_out;
};

// Key-value GA config file, one `key=value` per line; '#' starts a comment.
// Explicit command-line flags take precedence over file entries.
void apply_ga_config_file(const CLI::App& solve, SolveOptions& opt) {
  std::ifstream in(opt.ga_config_path);
  if (!in) {
    throw subdet::ConfigError("cannot open GA config file: " +
                              opt.ga_config_path);
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw subdet::ConfigError("GA config line " +
                                std::to_string(line_number) +
                                " is not key=value: " + line);
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
      throw subdet::ConfigError("GA config key '" + key +
                                "' has non-numeric value '" + value + "'");
    }
    const auto flag_given = [&solve](const std::string& name) {
      return solve.count(name) > 0;
    };
    if (key == "population_size") {
      if (!flag_given("--pop-size")) {
        opt.ga.population_size = static_cast<int>(parsed);
      }
    } else if (key == "p_cross") {
      if (!flag_given("--p-cross")) opt.ga.p_cross = parsed;
    } else if (key == "p_mutprop") {
      if (!flag_given("--p-mutprop")) opt.ga.p_mutprop = parsed;
    } else if (key == "p_mut") {
      if (!flag_given("--p-mut")) opt.ga.p_mut = parsed;
    } else if (key == "elite_fraction") {
      if (!flag_given("--elite-fraction")) opt.ga.elite_fraction = parsed;
    } else if (key == "tournament_size") {
      if (!flag_given("--tournament")) {
        opt.ga.tournament_size = static_cast<int>(parsed);
      }
    } else if (key == "generations") {
      if (!flag_given("--generations")) {
        opt.ga.generations = static_cast<int>(parsed);
      }
    } else {
      throw subdet::ConfigError("unknown GA config key '" + key + "'");
    }
  }
}

std::string describe_instance(const SolveOptions& opt) {
  if (!opt.matrix_path.empty()) return "matrix:" + opt.matrix_path;
  if (!opt.design_path.empty()) return "design:" + opt.design_path;
  return "generate:" + opt.generate_spec;
}

subdet::ObjectiveSpec build_objective(const SolveOptions& opt) {
  const int sources = (!opt.matrix_path.empty() ? 1 : 0) +
                      (!opt.design_path.empty() ? 1 : 0) +
                      (!opt.generate_spec.empty() ? 1 : 0);
  if (sources != 1) {
    throw subdet::ConfigError(
        "exactly one of --matrix, --design, --generate is required");
  }
  if (!opt.matrix_path.empty()) {
    return subdet::ObjectiveSpec::kernel(
        subdet::load_matrix_csv(opt.matrix_path));
  }
  if (!opt.design_path.empty()) {
    return subdet::ObjectiveSpec::information_gram(
        subdet::load_design_csv(opt.design_path));
  }
  const subdet::GeneratorSpec gen =
      subdet::parse_generator_spec(opt.generate_spec);
  switch (gen.kind) {
    case subdet::GeneratorSpec::Kind::kSynthetic:
      return subdet::ObjectiveSpec::kernel(
          subdet::synthetic_matrix(gen.synthetic));
    case subdet::GeneratorSpec::Kind::kFactorial:
      return subdet::ObjectiveSpec::information_gram(
          subdet::factorial_design(gen.factorial));
    case subdet::GeneratorSpec::Kind::kCovariance:
      return subdet::ObjectiveSpec::kernel(
          subdet::covariance_from_observations(
              subdet::load_observations_csv(gen.covariance_path)));
  }
  throw subdet::ConfigError("unreachable generator kind");
}

json config_echo(const SolveOptions& opt) {
  json cfg;
  if (opt.method == "exact") {
    cfg["guard"] = opt.guard;
    cfg["workers"] = opt.workers;
  } else if (opt.method == "ga") {
    cfg["population_size"] = opt.ga.population_size;
    cfg["p_cross"] = opt.ga.p_cross;
    cfg["p_mutprop"] = opt.ga.p_mutprop;
    cfg["p_mut"] = opt.ga.p_mut;
    cfg["elite_fraction"] = opt.ga.elite_fraction;
    cfg["tournament_size"] = opt.ga.tournament_size;
    cfg["generations"] = opt.ga.generations;
  } else if (opt.method == "dpp") {
    cfg["iterations"] = opt.iterations;
    cfg["projection_share"] = opt.projection_share;
    cfg["workers"] = opt.workers;
  }
  return cfg;
}

int run_solve(const CLI::App& solve, SolveOptions& opt) {
  if (!opt.ga_config_path.empty()) apply_ga_config_file(solve, opt);
  if (opt.workers < 1) opt.workers = default_workers();
  const subdet::ObjectiveSpec spec = build_objective(opt);

  subdet::SearchResult result;
  if (opt.method == "exact") {
    result = subdet::solve_exact(spec, opt.k, opt.guard, opt.workers);
  } else if (opt.method == "greedy") {
    result = subdet::solve_greedy_forward(spec, opt.k);
  } else if (opt.method == "backward") {
    result = subdet::solve_greedy_backward(spec, opt.k);
  } else if (opt.method == "exchange") {
    const subdet::SearchResult greedy =
        subdet::solve_greedy_forward(spec, opt.k);
    result = subdet::refine_exchange(spec, greedy.best_subset);
    for (auto& [evaluation, value] : result.trace) {
      evaluation += greedy.evaluations;
    }
    result.evaluations += greedy.evaluations;
    result.wall_time_ms += greedy.wall_time_ms;
  } else if (opt.method == "ga") {
    opt.ga.seed = opt.seed;
    result = subdet::solve_ga(spec, opt.k, opt.ga);
  } else if (opt.method == "dpp") {
    subdet::DPPConfig cfg;
    cfg.k = opt.k;
    cfg.iterations = opt.iterations;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    cfg.projection_share = opt.projection_share;
    result = subdet::solve_dpp(spec, cfg);
  } else {
    throw subdet::ConfigError("unknown method '" + opt.method + "'");
  }

  if (!opt.trace_out.empty()) {
    subdet::write_trace_csv(opt.trace_out, result.trace);
  }

  json record;
  record["method"] = opt.method;
  record["instance"] = describe_instance(opt);
  record["k"] = opt.k;
  if (opt.method == "ga" || opt.method == "dpp") {
    record["seed"] = opt.seed;
  } else {
    record["seed"] = nullptr;
  }
  record["config"] = config_echo(opt);
  json subset = json::array();
  for (int i : result.best_subset.indices()) subset.push_back(i + 1);
  record["best_subset"] = subset;
  record["best_log_objective"] = result.best_log_objective;
  record["evaluations"] = result.evaluations;
  record["wall_time_ms"] = result.wall_time_ms;
  record["trace_path"] =
      opt.trace_out.empty() ? json(nullptr) : json(opt.trace_out);

  if (opt.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::string subset_text;
    for (int i : result.best_subset.indices()) {
      if (!subset_text.empty()) subset_text += ' ';
      subset_text += std::to_string(i + 1);
    }
    std::string config_text;
    for (const auto& [key, value] : record["config"].items()) {
      if (!config_text.empty()) config_text += ';';
      config_text += key + "=" + value.dump();
    }
    std::cout << "method,instance,k,seed,config,best_subset,"
                 "best_log_objective,evaluations,wall_time_ms,trace_path\n";
    std::cout << opt.method << ',' << describe_instance(opt) << ',' << opt.k
              << ',' << record["seed"].dump() << ',' << config_text << ','
              << subset_text << ',' << record["best_log_objective"].dump()
              << ',' << result.evaluations << ',' << result.wall_time_ms
              << ',' << (opt.trace_out.empty() ? "-" : opt.trace_out)
              << "\n";
  } else {
    throw subdet::ConfigError("unknown format '" + opt.format + "'");
  }
  return 0;
}

int run_generate(const std::string& spec_text, const std::string& out_path) {
  const subdet::GeneratorSpec gen = subdet::parse_generator_spec(spec_text);
  switch (gen.kind) {
    case subdet::GeneratorSpec::Kind::kSynthetic:
      subdet::save_csv_matrix(out_path,
                              subdet::synthetic_matrix(gen.synthetic).data());
      break;
    case subdet::GeneratorSpec::Kind::kFactorial:
      subdet::save_csv_matrix(out_path,
                              subdet::factorial_design(gen.factorial));
      break;
    case subdet::GeneratorSpec::Kind::kCovariance:
      subdet::save_csv_matrix(
          out_path, subdet::covariance_from_observations(
                        subdet::load_observations_csv(gen.covariance_path))
                        .data());
      break;
  }
  return 0;
}

int run_pmf(const std::string& matrix_path, int k,
            const std::string& out_path) {
  const subdet::SymmetricMatrix l = subdet::load_matrix_csv(matrix_path);
  const auto pmf = subdet::kdpp_pmf(l, k);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      throw subdet::ConfigError("cannot write pmf file: " + out_path);
    }
    out = &file;
  }
  *out << "subset,probability\n";
  char buffer[64];
  for (const auto& [subset, probability] : pmf) {
    std::string text;
    for (int i : subset.indices()) {
      if (!text.empty()) text += ' ';
      text += std::to_string(i + 1);
    }
    std::snprintf(buffer, sizeof(buffer), "%.17g", probability);
    *out << text << ',' << buffer << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained subdeterminant maximization"};
  app.require_subcommand(1);

  SolveOptions opt;
  CLI::App* solve = app.add_subcommand("solve", "Run a solver");
  solve->add_option("--method", opt.method,
                    "exact | greedy | backward | exchange | ga | dpp")
      ->required();
  solve->add_option("--matrix", opt.matrix_path, "kernel CSV");
  solve->add_option("--design", opt.design_path, "design matrix CSV");
  solve->add_option("--generate", opt.generate_spec,
                    "inline generator spec (see generate subcommand)");
  solve->add_option("--k", opt.k, "subset cardinality")->required();
  solve->add_option("--guard", opt.guard, "enumeration guard for exact");
  solve->add_option("--seed", opt.seed, "RNG seed for ga/dpp");
  solve->add_option("--iterations", opt.iterations, "sample budget for dpp");
  solve->add_option("--projection-share", opt.projection_share,
                    "fraction of dpp draws from the top-k projection "
                    "component");
  solve->add_option("--workers", opt.workers,
                    "worker threads (default: SUBDET_WORKERS env or machine "
                    "parallelism)");
  solve->add_option("--pop-size", opt.ga.population_size, "GA population");
  solve->add_option("--p-cross", opt.ga.p_cross, "GA crossover proportion");
  solve->add_option("--p-mutprop", opt.ga.p_mutprop,
                    "GA mutated proportion of the population");
  solve->add_option("--p-mut", opt.ga.p_mut, "GA per-site swap probability");
  solve->add_option("--elite-fraction", opt.ga.elite_fraction,
                    "GA elite fraction");
  solve->add_option("--tournament", opt.ga.tournament_size,
                    "GA tournament size");
  solve->add_option("--generations", opt.ga.generations, "GA generations");
  solve->add_option("--ga-config", opt.ga_config_path,
                    "key=value GA config file; explicit flags win");
  solve->add_option("--format", opt.format, "json | csv");
  solve->add_option("--trace-out", opt.trace_out, "best-so-far trace CSV");

  std::string gen_spec;
  std::string gen_out;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a generated instance CSV");
  generate->add_option("--spec", gen_spec, "generator spec")->required();
  generate->add_option("--out", gen_out, "output CSV path")->required();

  std::string pmf_matrix;
  int pmf_k = 0;
  std::string pmf_out;
  CLI::App* pmf = app.add_subcommand(
      "pmf", "Exact fixed-size determinantal probability table");
  pmf->add_option("--matrix", pmf_matrix, "kernel CSV")->required();
  pmf->add_option("--k", pmf_k, "subset cardinality")->required();
  pmf->add_option("--out", pmf_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(*solve, opt);
    if (generate->parsed()) return run_generate(gen_spec, gen_out);
    if (pmf->parsed()) return run_pmf(pmf_matrix, pmf_k, pmf_out);
    return 2;
  } catch (const subdet::NotPositiveDefiniteError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const subdet::ObjectiveUndefinedError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const subdet::NumericalFailureError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const subdet::InvalidKernelError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const subdet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
