#include "rcft/clustering.hpp"

#include <algorithm>
#include <string>

#include "rcft/errors.hpp"

namespace rcft {
namespace {

void check_heads(std::span<const NodeId> heads, std::span<const SensorNode> nodes, const char* what) {
  if (heads.empty()) throw DomainError(std::string(what) + ": empty head set");
  for (const NodeId h : heads) {
    if (h >= nodes.size() || !nodes[h].alive) {
      throw DomainError(std::string(what) + ": head " + std::to_string(h) + " is not an alive node");
    }
  }
}

std::vector<NodeId> sorted_unique(std::span<const NodeId> heads) {
  std::vector<NodeId> out(heads.begin(), heads.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NodeId nearest_head(Point p, std::span<const NodeId> sorted_heads, std::span<const SensorNode> nodes) {
  NodeId best = kNoNode;
  double best_d = 0.0;
  for (const NodeId h : sorted_heads) {
    const double d = distance(p, nodes[h].pos);
    if (best == kNoNode || d < best_d) {
      best = h;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

bool Clustering::is_head(NodeId id) const {
  return std::binary_search(heads.begin(), heads.end(), id);
}

std::vector<NodeId> Clustering::members(NodeId head) const {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < member_of.size(); ++id) {
    if (member_of[id] == head) out.push_back(id);
  }
  return out;
}

std::size_t Clustering::member_count(NodeId head) const {
  return static_cast<std::size_t>(std::count(member_of.begin(), member_of.end(), head));
}

std::vector<std::size_t> Clustering::cluster_sizes() const {
  std::vector<std::size_t> sizes(heads.size(), 0);
  for (const NodeId h : member_of) {
    if (h == kNoNode) continue;
    const auto it = std::lower_bound(heads.begin(), heads.end(), h);
    if (it != heads.end() && *it == h) ++sizes[static_cast<std::size_t>(it - heads.begin())];
  }
  return sizes;
}

void validate_clustering(const Clustering& c, std::span<const SensorNode> nodes) {
  if (c.heads.empty()) throw DomainError("clustering: no heads");
  if (!std::is_sorted(c.heads.begin(), c.heads.end()) ||
      std::adjacent_find(c.heads.begin(), c.heads.end()) != c.heads.end()) {
    throw DomainError("clustering: heads not strictly ascending");
  }
  for (const NodeId h : c.heads) {
    if (h >= nodes.size() || !nodes[h].alive) {
      throw DomainError("clustering: head " + std::to_string(h) + " is not alive");
    }
  }
  if (c.member_of.size() != nodes.size()) {
    throw DomainError("clustering: member map does not cover the network");
  }
  for (const auto& n : nodes) {
    const NodeId assigned = c.member_of[n.id];
    const bool head = c.is_head(n.id);
    if (head && assigned != kNoNode) {
      throw DomainError("clustering: head " + std::to_string(n.id) + " listed as a member");
    }
    if (!n.alive && assigned != kNoNode) {
      throw DomainError("clustering: dead node " + std::to_string(n.id) + " listed as a member");
    }
    if (n.alive && !head) {
      if (assigned == kNoNode) {
        throw DomainError("clustering: alive node " + std::to_string(n.id) + " has no head");
      }
      if (!c.is_head(assigned)) {
        throw DomainError("clustering: node " + std::to_string(n.id) + " assigned to non-head " +
                          std::to_string(assigned));
      }
    }
  }
}

Clustering assign_by_distance(std::span<const NodeId> heads, std::span<const SensorNode> nodes) {
  check_heads(heads, nodes, "assign_by_distance");
  Clustering c;
  c.heads = sorted_unique(heads);
  c.member_of.assign(nodes.size(), kNoNode);
  for (const auto& n : nodes) {
    if (!n.alive || c.is_head(n.id)) continue;
    c.member_of[n.id] = nearest_head(n.pos, c.heads, nodes);
  }
  return c;
}

Clustering assign_by_hops(std::span<const NodeId> heads, const ConnectivityGraph& graph,
                          std::span<const SensorNode> nodes) {
  check_heads(heads, nodes, "assign_by_hops");
  Clustering c;
  c.heads = sorted_unique(heads);
  c.member_of.assign(nodes.size(), kNoNode);

  std::vector<int> best_hops(nodes.size(), HopField::kUnreachable);
  for (const NodeId h : c.heads) {  // ascending, so strict < keeps the lowest id on ties
    const HopField field = hop_distances(graph, h);
    for (const auto& n : nodes) {
      if (!n.alive || c.is_head(n.id)) continue;
      const int d = field.at(n.id);
      if (d == HopField::kUnreachable) continue;
      if (best_hops[n.id] == HopField::kUnreachable || d < best_hops[n.id]) {
        best_hops[n.id] = d;
        c.member_of[n.id] = h;
      }
    }
  }
  for (const auto& n : nodes) {
    if (n.alive && !c.is_head(n.id) && c.member_of[n.id] == kNoNode) {
      c.member_of[n.id] = nearest_head(n.pos, c.heads, nodes);
    }
  }
  return c;
}

}  // namespace rcft
