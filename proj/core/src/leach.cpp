#include "rcft/leach.hpp"

#include <algorithm>
#include <cmath>

#include "rcft/errors.hpp"

namespace rcft {

std::string_view to_string(MoveRule rule) { return rule == MoveRule::Half ? "half" : "full"; }

std::optional<MoveRule> parse_move_rule(std::string_view name) {
  if (name == "half") return MoveRule::Half;
  if (name == "full") return MoveRule::Full;
  return std::nullopt;
}

void ProtocolParams::validate() const {
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("head_fraction", "must lie in (0, 1]");
  if (leach_c_iterations < 1) throw ConfigError("leach_c_iterations", "must be at least 1");
  if (rcft_max_passes < 1) throw ConfigError("rcft_max_passes", "must be at least 1");
}

void LeachHistory::record(NodeId id, long round) {
  if (id >= last_head_round_.size()) last_head_round_.resize(std::size_t{id} + 1, kNever);
  last_head_round_[id] = round;
}

std::size_t leach_epoch_length(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("leach: p must lie in (0, 1]");
  // 1/p for p = 0.05 is 20.000000000000004 in binary; trim the noise first.
  const double inv = 1.0 / p;
  const double near = std::round(inv);
  return static_cast<std::size_t>(std::abs(inv - near) < 1e-9 ? near : std::ceil(inv));
}

double leach_threshold(double p, long round) {
  const auto epoch = static_cast<long>(leach_epoch_length(p));
  const double denom = 1.0 - p * static_cast<double>(round % epoch);
  // The last round of an epoch must give exactly 1, which p * (E - 1) misses by an ulp.
  if (denom <= p * (1.0 + 1e-12)) return 1.0;
  return std::clamp(p / denom, 0.0, 1.0);
}

bool leach_eligible(const LeachHistory& history, NodeId id, long round, double p) {
  const auto epoch = static_cast<long>(leach_epoch_length(p));
  const long epoch_start = round - round % epoch;
  const long last = history.last_head_round(id);
  return last == LeachHistory::kNever || last < epoch_start;
}

std::vector<NodeId> leach_elect(std::span<const SensorNode> nodes, long round,
                                const ProtocolParams& params, LeachHistory& history,
                                RngStream& rng) {
  std::vector<NodeId> alive;
  std::vector<NodeId> eligible;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    alive.push_back(n.id);
    if (leach_eligible(history, n.id, round, params.p)) eligible.push_back(n.id);
  }
  if (alive.empty()) throw SimulationOver("leach_elect: no alive nodes");

  const double threshold = leach_threshold(params.p, round);
  std::vector<NodeId> heads;
  for (const NodeId id : eligible) {
    if (rng.uniform01() < threshold) heads.push_back(id);
  }

  if (heads.empty()) {
    const auto& pool = eligible.empty() ? alive : eligible;
    NodeId forced = pool.front();
    for (const NodeId id : pool) {
      if (nodes[id].energy > nodes[forced].energy) forced = id;
    }
    heads.push_back(forced);
  }
  for (const NodeId h : heads) history.record(h, round);
  return heads;
}

}  // namespace rcft
