#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rcft/clustering.hpp"
#include "rcft/graph.hpp"
#include "rcft/params.hpp"
#include "rcft/rng.hpp"

namespace rcft {

enum class Direction { TowardClosestHead, TowardFarthestMember, Stay };

/// Why a head stayed without evaluating tl.
enum class StayReason { None, NoPeer, UnreachablePeer };

std::string_view to_string(Direction direction);
std::string_view to_string(StayReason reason);

/// Outcome of re-centering one head.
///
/// tl = closest_head_hops - farthest_member_hops. A positive tl means the
/// nearest peer head is farther away than the cluster edge, so the head
/// drifts toward that peer; a negative tl pulls it toward its farthest member.
struct RecenterDecision {
  NodeId head = kNoNode;
  NodeId closest_head = kNoNode;
  int closest_head_hops = 0;
  NodeId farthest_member = kNoNode;
  int farthest_member_hops = 0;
  int tl = 0;
  Direction direction = Direction::Stay;
  int steps_moved = 0;
  NodeId new_head = kNoNode;
  StayReason stay_reason = StayReason::None;
};

/// Re-centers `head` against the current head set and membership. The new
/// head never lands on another head: the step count backs off one hop at a
/// time until it clears.
RecenterDecision rcft_recenter_one(NodeId head, std::span<const NodeId> all_heads,
                                   const Clustering& clustering, const ConnectivityGraph& graph,
                                   const ProtocolParams& params);

/// Heads after one re-centering pass over `clustering` (ascending id order,
/// each head seeing the already-updated set). Decisions are appended to `trace`
/// when non-null.
std::vector<NodeId> rcft_recenter_pass(const Clustering& clustering, const ConnectivityGraph& graph,
                                       const ProtocolParams& params,
                                       std::vector<RecenterDecision>* trace = nullptr);

struct RcftFormation {
  Clustering initial;     // random draw + hop assignment
  Clustering clustering;  // final, frozen
  std::size_t passes = 0; // re-centering passes executed
  std::vector<RecenterDecision> decisions;
  std::vector<std::vector<NodeId>> head_sets;  // every head set whose hop counts were gathered
};

/// Number of RCFT heads for `alive` nodes: round(p * alive), at least 1.
std::size_t rcft_head_count(double p, std::size_t alive);

/// Random election, hop assignment, then up to rcft_max_passes re-centering
/// passes (early exit when no head moves), then a final hop assignment.
/// Throws DomainError if fewer nodes are alive than heads are needed.
RcftFormation rcft_form(std::span<const SensorNode> nodes, const ConnectivityGraph& graph,
                        const ProtocolParams& params, RngStream& rng);

/// Everything rcft_form does after the random draw, starting from `heads`.
RcftFormation rcft_refine(std::vector<NodeId> heads, std::span<const SensorNode> nodes,
                          const ConnectivityGraph& graph, const ProtocolParams& params);

}  // namespace rcft
