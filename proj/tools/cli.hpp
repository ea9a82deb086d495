#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vrel/error.hpp"
#include "vrel/generators.hpp"
#include "vrel/heuristics.hpp"

namespace vrel::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitBudget = 3,
};

enum class OutputFormat { kCsv, kJson };

// Everything one invocation needs, after flag parsing.
struct RunConfig {
  std::string subcommand;
  std::string input;   // graph file or dataset directory
  std::string output;  // dataset or report directory
  DatasetSpec dataset;
  std::vector<HeuristicId> heuristics;
  std::optional<std::uint64_t> seed;
  int repetitions = 1;
  int jobs = 1;
  bool exact = false;
  std::optional<double> p;
  OutputFormat format = OutputFormat::kCsv;
};

// Parses `args` (without the program name) and runs the subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_generate(const RunConfig& config, std::ostream& out);
int cmd_recommend(const RunConfig& config, std::ostream& out);
int cmd_evaluate(const RunConfig& config, std::ostream& out);
int cmd_bench(const RunConfig& config, std::ostream& out);

// Library error class to process exit code.
int exit_code_for(Errc code);

}  // namespace vrel::cli
