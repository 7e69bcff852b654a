#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rcft/params.hpp"
#include "rcft/rng.hpp"
#include "rcft/types.hpp"

namespace rcft {

/// Last round each node served as head.
class LeachHistory {
 public:
  static constexpr long kNever = -1;

  explicit LeachHistory(std::size_t node_count = 0) : last_head_round_(node_count, kNever) {}

  long last_head_round(NodeId id) const { return id < last_head_round_.size() ? last_head_round_[id] : kNever; }
  void record(NodeId id, long round);

 private:
  std::vector<long> last_head_round_;
};

/// Rounds per LEACH epoch, ceil(1/p).
std::size_t leach_epoch_length(double p);

/// Threshold T(n) = p / (1 - p * (round mod epoch)), clamped to [0, 1].
double leach_threshold(double p, long round);

/// True if `id` has not served as head since the current epoch began.
bool leach_eligible(const LeachHistory& history, NodeId id, long round, double p);

/// Rotating LEACH election. Each alive, epoch-eligible node volunteers with
/// probability T(n) (one uniform draw per eligible node, ascending id). If
/// nobody volunteers, the eligible node with the most residual energy is
/// forced (ties: lowest id); with no eligible node left, the pool widens to
/// every alive node. Elected heads are recorded in `history`.
/// Returns heads ascending. Throws SimulationOver if no node is alive.
std::vector<NodeId> leach_elect(std::span<const SensorNode> nodes, long round,
                                const ProtocolParams& params, LeachHistory& history,
                                RngStream& rng);

}  // namespace rcft
