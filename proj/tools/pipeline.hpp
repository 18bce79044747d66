#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nagata/checkers.hpp"
#include "nagata/generators.hpp"
#include "nagata/metric_space.hpp"

namespace nagata::cli {

/// Process exit codes. Every failure path maps to exactly one of these.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,          // bad flags, unreadable or invalid input
  kConstructionError = 3,   // a pipeline stage could not build its output
  kVerificationFailure = 4, // some enabled check failed (witness written)
  kOutputError = 5,         // artifacts could not be written
  kInternalError = 6,       // unexpected exception
};

struct PipelineConfig {
  std::optional<std::filesystem::path> space_file;  // .csv or JSON
  std::string generator;
  GeneratorParams params;
  std::uint64_t seed = 0;

  std::size_t dimension = 1;
  Distance d1 = 1;
  std::size_t levels = 0;  // 0 means saturate
  std::size_t max_levels = 64;
  int retries = 6;
  std::string provider = "auto";  // auto | interval | greedy

  /// "nagata" builds the pipeline; "raw" runs the metric checkers on the
  /// input space directly.
  std::string target = "nagata";
  /// Defaults to the properties the construction guarantees for D. (N1)_n
  /// is available but is not implied by the construction.
  std::set<std::string> checks = {"n2", "ultra", "nesting", "coarse"};
  CheckMode mode = Exhaustive{};
  std::vector<Distance> radii;  // empty: powers of two up to the diameter
  unsigned workers = 1;

  std::filesystem::path out_dir = "nagata_out";
};

/// Parses "n1,n2,all,..." into a check set; throws InputError on unknown names.
std::set<std::string> parse_checks(const std::string& list);
/// "exhaustive" or "sampled:COUNT".
CheckMode parse_mode(const std::string& text, std::uint64_t seed);
/// "K=V" pairs.
GeneratorParams parse_params(const std::vector<std::string>& pairs);

struct PipelineResult {
  int exit_code = kOk;
  nlohmann::json summary;
};

/// Runs ingest -> covers -> nesting -> D -> checks and writes every artifact
/// into config.out_dir. Never throws; errors become exit codes plus an
/// error.json describing the stage and witness payload.
PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& log);

FiniteMetricSpace load_space(const std::filesystem::path& path);

}  // namespace nagata::cli
