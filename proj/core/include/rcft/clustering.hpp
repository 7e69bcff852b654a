#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rcft/graph.hpp"
#include "rcft/types.hpp"

namespace rcft {

/// Head set plus member -> head assignment for one formation.
struct Clustering {
  std::vector<NodeId> heads;      // ascending, distinct
  std::vector<NodeId> member_of;  // indexed by node id; kNoNode for heads and dead nodes
  int formed_at_round = 0;
  Protocol protocol = Protocol::Leach;

  bool is_head(NodeId id) const;
  /// Members of `head`, ascending.
  std::vector<NodeId> members(NodeId head) const;
  std::size_t member_count(NodeId head) const;
  /// Member counts aligned with `heads`.
  std::vector<std::size_t> cluster_sizes() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Throws DomainError describing the first broken invariant: empty or
/// non-alive heads, an alive non-head without exactly one valid head, a
/// head or dead node listed as a member.
void validate_clustering(const Clustering& clustering, std::span<const SensorNode> nodes);

/// Every alive non-head joins its Euclidean-nearest head (ties: lowest head id).
/// Throws DomainError on an empty or non-alive head set.
Clustering assign_by_distance(std::span<const NodeId> heads, std::span<const SensorNode> nodes);

/// Every alive non-head joins the head with the fewest hops (ties: lowest head
/// id). Nodes no head can reach fall back to the Euclidean-nearest head.
/// Throws DomainError on an empty or non-alive head set.
Clustering assign_by_hops(std::span<const NodeId> heads, const ConnectivityGraph& graph,
                          std::span<const SensorNode> nodes);

}  // namespace rcft
