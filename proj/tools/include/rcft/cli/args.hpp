#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcft/types.hpp"

namespace rcft::cli {

enum class Command { Simulate, Compare, PaperSuite, Plot };

/// Seeds for `--seeds N` are kSeedBase, kSeedBase + 1, ..., kSeedBase + N - 1.
inline constexpr std::uint64_t kSeedBase = 1;

std::vector<std::uint64_t> derive_seeds(std::size_t count);

struct RunSpec {
  Command command = Command::Simulate;
  std::optional<std::filesystem::path> config_path;
  std::vector<std::string> overrides;  // key=value, applied in order
  std::filesystem::path out_dir = "out";
  std::filesystem::path in_dir;        // plot only
  std::vector<Protocol> protocols;
  std::vector<std::uint64_t> seeds;
  std::size_t threads = 1;
  std::size_t cluster_rounds = 20;     // plot: prefix used for cluster statistics
};

/// Malformed command line. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text. Maps to exit code 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunSpec parse_args(const std::vector<std::string>& args);
RunSpec parse_args(int argc, const char* const* argv);

}  // namespace rcft::cli
