#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rcft/types.hpp"

namespace rcft {

/// Unit-disk graph over the alive nodes of a network. Immutable once built.
///
/// Adjacency is stored per node id over the whole id space so lookups stay
/// O(1); ids of dead nodes are simply absent. Neighbor lists are ascending.
class ConnectivityGraph {
 public:
  ConnectivityGraph() = default;

  double range() const noexcept { return range_; }

  /// Alive ids, ascending.
  std::span<const NodeId> node_ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  /// One past the largest id the graph was built over.
  std::size_t id_bound() const noexcept { return present_.size(); }

  bool contains(NodeId id) const noexcept { return id < present_.size() && present_[id]; }

  /// Throws LookupError if id is not in the graph.
  std::span<const NodeId> neighbors(NodeId id) const;

  friend bool operator==(const ConnectivityGraph&, const ConnectivityGraph&) = default;

 private:
  friend ConnectivityGraph build_graph(std::span<const SensorNode>, double);

  double range_ = 0.0;
  std::vector<NodeId> ids_;
  std::vector<bool> present_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edges_ = 0;
};

/// Edge between i != j iff both alive and distance(i, j) <= range.
/// Throws DomainError if range is not positive.
ConnectivityGraph build_graph(std::span<const SensorNode> nodes, double range);

/// Breadth-first hop counts from one source.
struct HopField {
  static constexpr int kUnreachable = -1;

  NodeId source = kNoNode;
  std::vector<int> hops;  // indexed by node id

  bool reachable(NodeId id) const noexcept {
    return id < hops.size() && hops[id] != kUnreachable;
  }
  /// Hop count or kUnreachable; ids outside the graph read as unreachable.
  int at(NodeId id) const noexcept { return id < hops.size() ? hops[id] : kUnreachable; }
};

/// Throws LookupError if source is not in the graph.
HopField hop_distances(const ConnectivityGraph& graph, NodeId source);

/// Hop distance between two nodes, HopField::kUnreachable if disconnected.
int hop_distance(const ConnectivityGraph& graph, NodeId from, NodeId to);

/// Node reached after `steps` hops along the canonical shortest path from
/// `from` to `target`: BFS from target, then greedy descent picking the
/// lowest-id neighbor one hop closer. Clamps at target.
/// Throws LookupError for unknown ids and PathError if target is unreachable.
NodeId step_toward(const ConnectivityGraph& graph, NodeId from, NodeId target, std::size_t steps);

/// Member with the largest finite hop count; ties go to the highest id
/// (the last responder). Unreachable members are skipped.
/// Throws DomainError if members is empty or none is reachable.
std::pair<NodeId, int> farthest_member(const HopField& hops, std::span<const NodeId> members);

}  // namespace rcft
