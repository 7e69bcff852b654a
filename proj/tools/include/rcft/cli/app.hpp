#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcft/cli/args.hpp"

namespace rcft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Executes a parsed command. Progress and summaries go to `out`.
void execute(const RunSpec& spec, std::ostream& out);

/// Whole front end: parse, execute, map failures to exit codes. Diagnostics
/// go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rcft::cli
