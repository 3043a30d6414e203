#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fisherrao::cli {

enum ExitCode : int {
  kOk = 0,
  kBenchFailure = 1,
  kInputError = 2,
  kPreconditionError = 3,
};

struct RunConfig {
  std::string command;
  std::string input;  // path, or inline JSON when it starts with '{'
  std::size_t T = 1000;
  std::vector<std::string> curves;
  std::string method = "co";
  double kappa = 1.0;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "json";
  std::string out_path;
  std::string sampling = "accumulated";
  std::size_t samples = 11;
  std::size_t trials = 100;
  std::string suite;
  std::vector<int> scenarios;
  std::vector<std::size_t> dims;
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fisherrao::cli
