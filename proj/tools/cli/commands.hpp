#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace paving::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kInconclusive = 3,
};

enum class Format { Json, Csv };

struct CliConfig {
  std::string command;
  std::optional<std::string> m;  // integer for construct, "lo..hi" for certify
  std::optional<std::size_t> n;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> count;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> vector_seed;
  std::optional<double> gamma;
  std::optional<double> epsilon;
  std::string mode = "conjectureA";
  std::size_t max_n = 24;
  unsigned workers = 1;
  std::optional<std::string> output;
  Format format = Format::Json;
  bool timing = true;
};

/// Parses "lo..hi" or a single integer. Throws std::invalid_argument.
std::pair<int, int> parse_m_range(const std::string& text);

/// Runs the command line. Reports go to `out` unless --output names a
/// file; progress and diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paving::cli
