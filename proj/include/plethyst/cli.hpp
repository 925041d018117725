#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace plethyst::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kParseError = 2,
  kBoundError = 3,
  kIoError = 4,
};

enum class Format { text, json };

inline constexpr int kDefaultHardCap = 16;

struct SweepConfig {
  int max_product = 6;
  bool oracle = false;
  std::optional<std::string> output_path;
  Format format = Format::text;
  int parallelism = 1;
};

// Hard cap on mn: PLETHYST_MAX_N when set to a positive integer, else 16.
int hard_cap();

// Entry point shared by the executable and the tests. argv[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plethyst::cli
