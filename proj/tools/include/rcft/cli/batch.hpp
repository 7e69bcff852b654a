#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rcft/engine.hpp"

namespace rcft::cli {

/// Runs every (protocol, seed) pair, fanning out over `threads` workers.
/// Logs come back ordered by protocol, then seed, whatever the thread count.
std::vector<ExperimentLog> run_batch(const NetworkConfig& base, const ProtocolParams& params,
                                     std::span<const Protocol> protocols,
                                     std::span<const std::uint64_t> seeds, std::size_t threads);

/// Logs of one protocol.
std::vector<ExperimentLog> select(std::span<const ExperimentLog> logs, Protocol protocol);

}  // namespace rcft::cli
