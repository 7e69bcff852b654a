#include "rcft/rcft.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "rcft/errors.hpp"

namespace rcft {

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::TowardClosestHead: return "toward-closest-head";
    case Direction::TowardFarthestMember: return "toward-farthest-member";
    case Direction::Stay: return "stay";
  }
  return "unknown";
}

std::string_view to_string(StayReason reason) {
  switch (reason) {
    case StayReason::None: return "";
    case StayReason::NoPeer: return "no-peer";
    case StayReason::UnreachablePeer: return "unreachable-peer";
  }
  return "unknown";
}

namespace {

RecenterDecision stay(NodeId head, StayReason reason) {
  RecenterDecision d;
  d.head = head;
  d.new_head = head;
  d.stay_reason = reason;
  return d;
}

}  // namespace

RecenterDecision rcft_recenter_one(NodeId head, std::span<const NodeId> all_heads,
                                   const Clustering& clustering, const ConnectivityGraph& graph,
                                   const ProtocolParams& params) {
  if (std::find(all_heads.begin(), all_heads.end(), head) == all_heads.end()) {
    throw DomainError("rcft_recenter_one: node " + std::to_string(head) + " is not a head");
  }
  if (all_heads.size() < 2) return stay(head, StayReason::NoPeer);

  const std::vector<NodeId> members = clustering.members(head);
  const HopField field = hop_distances(graph, head);

  NodeId closest = kNoNode;
  int closest_hops = HopField::kUnreachable;
  for (const NodeId other : all_heads) {
    if (other == head) continue;
    const int h = field.at(other);
    if (h == HopField::kUnreachable) continue;
    if (closest == kNoNode || h < closest_hops || (h == closest_hops && other < closest)) {
      closest = other;
      closest_hops = h;
    }
  }
  if (closest == kNoNode) return stay(head, StayReason::UnreachablePeer);

  // With nobody answering, the head is its own farthest responder.
  const bool any_reachable = std::any_of(members.begin(), members.end(),
                                         [&](NodeId m) { return field.reachable(m); });
  const auto [farthest, farthest_hops] =
      any_reachable ? farthest_member(field, members) : std::pair<NodeId, int>{head, 0};

  RecenterDecision d;
  d.head = head;
  d.closest_head = closest;
  d.closest_head_hops = closest_hops;
  d.farthest_member = farthest;
  d.farthest_member_hops = farthest_hops;
  d.tl = closest_hops - farthest_hops;
  d.new_head = head;
  if (d.tl == 0) return d;

  d.direction = d.tl > 0 ? Direction::TowardClosestHead : Direction::TowardFarthestMember;
  const NodeId target = d.tl > 0 ? closest : farthest;
  const int magnitude = std::abs(d.tl);
  int steps = params.rcft_move_rule == MoveRule::Half ? (magnitude + 1) / 2 : magnitude;

  auto occupied = [&](NodeId id) {
    return id != head && std::find(all_heads.begin(), all_heads.end(), id) != all_heads.end();
  };
  NodeId landing = step_toward(graph, head, target, static_cast<std::size_t>(steps));
  while (steps > 0 && occupied(landing)) {
    --steps;
    landing = step_toward(graph, head, target, static_cast<std::size_t>(steps));
  }
  d.new_head = landing;
  d.steps_moved = std::min(steps, field.at(target));
  return d;
}

std::vector<NodeId> rcft_recenter_pass(const Clustering& clustering, const ConnectivityGraph& graph,
                                       const ProtocolParams& params,
                                       std::vector<RecenterDecision>* trace) {
  std::vector<NodeId> current = clustering.heads;
  for (std::size_t i = 0; i < clustering.heads.size(); ++i) {
    const RecenterDecision d =
        rcft_recenter_one(clustering.heads[i], current, clustering, graph, params);
    current[i] = d.new_head;
    if (trace != nullptr) trace->push_back(d);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::size_t rcft_head_count(double p, std::size_t alive) {
  const auto k = static_cast<std::size_t>(std::llround(p * static_cast<double>(alive)));
  return std::max<std::size_t>(k, 1);
}

RcftFormation rcft_form(std::span<const SensorNode> nodes, const ConnectivityGraph& graph,
                        const ProtocolParams& params, RngStream& rng) {
  std::vector<NodeId> alive;
  for (const auto& n : nodes) {
    if (n.alive) alive.push_back(n.id);
  }
  const std::size_t k = rcft_head_count(params.p, alive.size());
  if (alive.size() < k) {
    throw DomainError("rcft_form: " + std::to_string(alive.size()) + " alive nodes, need " +
                      std::to_string(k) + " heads");
  }

  return rcft_refine(rng.sample_without_replacement(alive, k), nodes, graph, params);
}

RcftFormation rcft_refine(std::vector<NodeId> heads, std::span<const SensorNode> nodes,
                          const ConnectivityGraph& graph, const ProtocolParams& params) {
  std::sort(heads.begin(), heads.end());
  RcftFormation out;
  out.initial = assign_by_hops(heads, graph, nodes);
  out.initial.protocol = Protocol::Rcft;

  out.head_sets.push_back(heads);
  Clustering current = out.initial;
  for (std::size_t pass = 0; pass < params.rcft_max_passes; ++pass) {
    std::vector<NodeId> moved = rcft_recenter_pass(current, graph, params, &out.decisions);
    ++out.passes;
    if (moved == current.heads) break;
    out.head_sets.push_back(moved);
    current = assign_by_hops(moved, graph, nodes);
    current.protocol = Protocol::Rcft;
  }
  out.clustering = std::move(current);
  return out;
}

}  // namespace rcft
