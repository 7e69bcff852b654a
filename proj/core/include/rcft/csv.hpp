#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rcft/engine.hpp"

namespace rcft {

inline constexpr const char* kRoundsHeader =
    "protocol,seed,round,alive,clusters,mean_cluster_size,mean_member_distance_m,"
    "round_energy_j,cum_mean_energy_j,formed";
inline constexpr const char* kClustersHeader = "protocol,seed,round,head_id,members,mean_distance_m";

/// %.6g formatting used for every floating-point CSV field.
std::string format_sig6(double value);

/// Writes rounds.csv and clusters.csv into `dir` (created if missing). Rows
/// are ordered by (protocol, seed, round, head_id). Each file is written to a
/// temporary sibling and renamed into place. Throws std::runtime_error naming
/// the path on I/O failure.
void write_csv(std::span<const ExperimentLog> logs, const std::filesystem::path& dir);

/// Rebuilds logs (protocol, seed, reports) from a directory written by
/// write_csv(). Config snapshots are not stored and come back as defaults.
std::vector<ExperimentLog> read_csv(const std::filesystem::path& dir);

}  // namespace rcft
