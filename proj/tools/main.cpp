#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "nagata/errors.hpp"
#include "pipeline.hpp"

int main(int argc, char** argv) {
  using namespace nagata;
  using namespace nagata::cli;

  CLI::App app{"nagata: nested covers, the level metric D, and exhaustive property checks"};
  app.set_version_flag("--version", "0.1.0");

  std::string space_file, generator, checks = "n2,ultra,nesting,coarse", mode = "exhaustive", target = "nagata";
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::size_t dimension = 1, levels = 0, max_levels = 64;
  long long d1 = 1;
  int retries = 6;
  bool saturate = false;
  std::string provider = "auto";
  std::vector<long long> radii;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string out_dir = "nagata_out";

  auto* space_opt = app.add_option("--space", space_file, "metric space file (JSON or .csv)");
  auto* gen_opt = app.add_option("--generate", generator,
                                 "generator: line, cycle, grid2d, random_graph, ultrametric_random");
  space_opt->excludes(gen_opt);
  app.add_option("--params", params, "generator parameters K=V ...")->needs(gen_opt);
  app.add_option("--seed", seed, "seed for generators and sampled checks");
  app.add_option("--dimension,-n", dimension, "target dimension n (n+1 colors)");
  app.add_option("--d1", d1, "initial scale d_1")->check(CLI::PositiveNumber);
  auto* levels_opt = app.add_option("--levels", levels, "number of levels")->check(CLI::PositiveNumber);
  auto* sat_opt = app.add_flag("--saturate", saturate, "add levels until one member is X (default)");
  levels_opt->excludes(sat_opt);
  app.add_option("--max-levels", max_levels, "level cap when saturating");
  app.add_option("--retries", retries, "provider retries per level (bound_B doubling)");
  app.add_option("--provider", provider, "auto, interval or greedy");
  app.add_option("--check", checks, "n1,n2,ultra,nesting,coarse,all (default n2,ultra,nesting,coarse)");
  app.add_option("--mode", mode, "exhaustive or sampled:COUNT");
  app.add_option("--radii", radii, "radii for the (N1) check")->delimiter(',');
  app.add_option("--target", target, "nagata (build D) or raw (check the input metric)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "checker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  PipelineConfig config;
  try {
    if (!space_file.empty()) config.space_file = space_file;
    config.generator = generator;
    config.params = parse_params(params);
    config.seed = seed;
    config.dimension = dimension;
    config.d1 = d1;
    config.levels = levels;
    config.max_levels = max_levels;
    config.retries = retries;
    config.provider = provider;
    config.target = target;
    config.checks = parse_checks(checks);
    config.mode = parse_mode(mode, seed);
    config.radii.assign(radii.begin(), radii.end());
    config.workers = workers;
    config.out_dir = out_dir;
  } catch (const InputError& e) {
    std::cerr << "error [input]: " << e.what() << "\n";
    return kInputError;
  }

  return run_pipeline(config, std::cerr).exit_code;
}
