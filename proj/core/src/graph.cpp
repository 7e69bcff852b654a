#include "rcft/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "rcft/errors.hpp"

namespace rcft {
namespace {

void require_node(const ConnectivityGraph& graph, NodeId id, const char* what) {
  if (!graph.contains(id)) {
    throw LookupError(std::string(what) + ": node " + std::to_string(id) + " is not in the graph");
  }
}

}  // namespace

std::span<const NodeId> ConnectivityGraph::neighbors(NodeId id) const {
  require_node(*this, id, "neighbors");
  return adjacency_[id];
}

ConnectivityGraph build_graph(std::span<const SensorNode> nodes, double range) {
  if (!(range > 0.0) || !std::isfinite(range)) throw DomainError("build_graph: range must be positive");

  ConnectivityGraph graph;
  graph.range_ = range;
  std::size_t bound = 0;
  for (const auto& n : nodes) bound = std::max<std::size_t>(bound, std::size_t{n.id} + 1);
  graph.present_.assign(bound, false);
  graph.adjacency_.assign(bound, {});

  std::vector<const SensorNode*> alive;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    alive.push_back(&n);
    graph.present_[n.id] = true;
  }
  std::sort(alive.begin(), alive.end(),
            [](const SensorNode* a, const SensorNode* b) { return a->id < b->id; });
  for (const auto* n : alive) graph.ids_.push_back(n->id);

  for (std::size_t i = 0; i < alive.size(); ++i) {
    for (std::size_t j = i + 1; j < alive.size(); ++j) {
      if (distance(alive[i]->pos, alive[j]->pos) <= range) {
        graph.adjacency_[alive[i]->id].push_back(alive[j]->id);
        graph.adjacency_[alive[j]->id].push_back(alive[i]->id);
        ++graph.edges_;
      }
    }
  }
  for (auto& adj : graph.adjacency_) std::sort(adj.begin(), adj.end());
  return graph;
}

HopField hop_distances(const ConnectivityGraph& graph, NodeId source) {
  require_node(graph, source, "hop_distances");
  HopField field;
  field.source = source;
  field.hops.assign(graph.id_bound(), HopField::kUnreachable);
  field.hops[source] = 0;
  std::deque<NodeId> queue{source};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const NodeId v : graph.neighbors(u)) {
      if (field.hops[v] != HopField::kUnreachable) continue;
      field.hops[v] = field.hops[u] + 1;
      queue.push_back(v);
    }
  }
  return field;
}

int hop_distance(const ConnectivityGraph& graph, NodeId from, NodeId to) {
  require_node(graph, to, "hop_distance");
  return hop_distances(graph, from).at(to);
}

NodeId step_toward(const ConnectivityGraph& graph, NodeId from, NodeId target, std::size_t steps) {
  require_node(graph, from, "step_toward");
  const HopField to_target = hop_distances(graph, target);
  if (!to_target.reachable(from)) {
    throw PathError("step_toward: node " + std::to_string(target) + " unreachable from " +
                    std::to_string(from));
  }
  NodeId at = from;
  for (std::size_t s = 0; s < steps && at != target; ++s) {
    const int want = to_target.at(at) - 1;
    // Neighbor lists are ascending, so the first match is the lowest id.
    for (const NodeId v : graph.neighbors(at)) {
      if (to_target.at(v) == want) {
        at = v;
        break;
      }
    }
  }
  return at;
}

std::pair<NodeId, int> farthest_member(const HopField& hops, std::span<const NodeId> members) {
  if (members.empty()) throw DomainError("farthest_member: no members");
  NodeId best = kNoNode;
  int best_hops = HopField::kUnreachable;
  for (const NodeId m : members) {
    const int h = hops.at(m);
    if (h == HopField::kUnreachable) continue;
    if (h > best_hops || (h == best_hops && m > best)) {
      best = m;
      best_hops = h;
    }
  }
  if (best == kNoNode) throw DomainError("farthest_member: no member is reachable");
  return {best, best_hops};
}

}  // namespace rcft
