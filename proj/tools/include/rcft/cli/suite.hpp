#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rcft/metrics.hpp"

namespace rcft::cli {

struct SuiteOptions {
  std::filesystem::path out_dir = "paper-suite";
  std::vector<std::uint64_t> seeds;  // empty: derive_seeds(10)
  std::size_t cluster_rounds = 20;
  std::size_t energy_rounds = 150;
  std::size_t threads = 1;
  NetworkConfig config;  // Table I preset by default
  ProtocolParams params;
};

struct ProtocolSummary {
  Protocol protocol = Protocol::Leach;
  SummaryStats clusters;            // first cluster_rounds rounds
  std::vector<double> energy;       // mean cumulative energy per node, energy_rounds long
};

struct SuiteResult {
  std::vector<ProtocolSummary> protocols;  // leach, leach-c, rcft
  std::optional<long> crossover_round;     // first round (1-based) from which RCFT stays below LEACH
  std::vector<std::filesystem::path> files;

  const ProtocolSummary& get(Protocol protocol) const;
};

/// Reference values printed next to the measured ones in summary.txt.
struct ReportedValue {
  const char* metric;
  const char* value;
};

/// Runs every protocol for energy_rounds rounds on each seed, derives the
/// cluster statistics from the first cluster_rounds rounds (runs are
/// prefix-stable), and writes rounds.csv, clusters.csv, summary.txt and four
/// SVG charts into out_dir.
SuiteResult run_paper_suite(const SuiteOptions& options);

/// Summary statistics for the logs already in memory.
SuiteResult summarize_suite(const std::vector<ExperimentLog>& logs, std::size_t cluster_rounds);

std::string format_summary(const SuiteResult& result, const SuiteOptions& options);

/// Writes the four charts; returns their paths.
std::vector<std::filesystem::path> write_charts(const SuiteResult& result,
                                                const std::filesystem::path& dir);

}  // namespace rcft::cli
