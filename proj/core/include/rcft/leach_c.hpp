#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rcft/rng.hpp"
#include "rcft/types.hpp"

namespace rcft {

/// Sum over alive non-heads of the distance to their nearest head.
double placement_cost(std::span<const SensorNode> nodes, std::span<const NodeId> heads);

/// Alive nodes whose residual energy is at least the alive mean. Falls back to
/// every alive node when fewer than k qualify.
std::vector<NodeId> leach_c_candidates(std::span<const SensorNode> nodes, std::size_t k);

/// Centralized LEACH-C head placement. Picks k heads from the candidate pool
/// minimizing placement_cost().
///
/// Small pools (at most kExhaustiveLimit combinations) are solved exactly.
/// Larger pools use best-improvement single-swap local search seeded with k
/// uniform draws, for at most `iterations` sweeps. Returns heads ascending.
/// Throws DomainError if k is zero or exceeds the alive count.
std::vector<NodeId> leach_c_elect(std::span<const SensorNode> nodes, std::size_t k,
                                  std::size_t iterations, RngStream& rng);

inline constexpr std::size_t kExhaustiveLimit = 20000;

/// The local-search path on its own, whatever the pool size.
std::vector<NodeId> leach_c_local_search(std::span<const SensorNode> nodes,
                                         std::span<const NodeId> candidates, std::size_t k,
                                         std::size_t iterations, RngStream& rng);

}  // namespace rcft
