#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rcft/clustering.hpp"
#include "rcft/graph.hpp"
#include "rcft/leach.hpp"
#include "rcft/params.hpp"
#include "rcft/rng.hpp"
#include "rcft/types.hpp"

namespace rcft {

struct ClusterStat {
  NodeId head = kNoNode;
  std::size_t members = 0;
  std::optional<double> mean_distance;  // empty for a memberless cluster

  friend bool operator==(const ClusterStat&, const ClusterStat&) = default;
};

struct RoundReport {
  long round = 0;
  Protocol protocol = Protocol::Leach;
  std::uint64_t seed = 0;
  std::size_t alive_count = 0;  // nodes alive when the round started
  std::vector<ClusterStat> clusters;
  double energy_spent = 0.0;      // network total for the round, formation included
  double formation_energy = 0.0;  // set-up share of energy_spent
  double cumulative_mean_energy = 0.0;  // cumulative spend / initial node count
  bool formation_happened = false;

  friend bool operator==(const RoundReport&, const RoundReport&) = default;
};

struct ExperimentLog {
  NetworkConfig config;
  ProtocolParams params;
  Protocol protocol = Protocol::Leach;
  std::vector<RoundReport> reports;
  std::vector<long> death_round;  // per node, kAlive if it survived
  std::size_t formation_count = 0;

  static constexpr long kAlive = -1;

  friend bool operator==(const ExperimentLog&, const ExperimentLog&) = default;
};

/// Mutable state of one run. Owned by a single thread.
class NetworkState {
 public:
  NetworkState(NetworkConfig config, std::vector<SensorNode> nodes);

  const NetworkConfig& config() const noexcept { return config_; }
  std::span<const SensorNode> nodes() const noexcept { return nodes_; }
  const ConnectivityGraph& graph() const noexcept { return graph_; }
  LeachHistory& history() noexcept { return history_; }
  const std::vector<long>& death_round() const noexcept { return death_round_; }

  std::size_t alive_count() const;
  double total_energy() const;
  double cumulative_spent() const noexcept { return cumulative_spent_; }

  /// Drains up to `joules` from a node, flooring at zero. Returns the amount
  /// actually drawn. Dead nodes draw nothing.
  double spend(NodeId id, double joules);

  /// Marks every alive node at zero energy as dead in `round`. Rebuilds the
  /// graph when anyone died. Returns the number of deaths.
  std::size_t settle_deaths(long round);

  /// Frozen RCFT clustering, if one has been formed.
  const std::optional<Clustering>& frozen() const noexcept { return frozen_; }
  void freeze(Clustering clustering) { frozen_ = std::move(clustering); }

  std::size_t formation_count() const noexcept { return formation_count_; }
  void count_formation() noexcept { ++formation_count_; }

  /// Adds a formation's energy to the running total. steady_round() accounts
  /// for its own spend.
  void add_spent(double joules) noexcept { cumulative_spent_ += joules; }

 private:
  NetworkConfig config_;
  std::vector<SensorNode> nodes_;
  ConnectivityGraph graph_;
  LeachHistory history_;
  std::vector<long> death_round_;
  std::optional<Clustering> frozen_;
  std::size_t formation_count_ = 0;
  double cumulative_spent_ = 0.0;
};

struct SetupResult {
  Clustering clustering;
  double formation_energy = 0.0;
  bool formed = false;
};

/// Drops dead members and hands each dead head's role to its member with the
/// most residual energy (ties: lowest id). Clusters with nobody left vanish.
Clustering repair_clustering(const Clustering& clustering, std::span<const SensorNode> nodes);

/// Energy drawn by one LEACH-style formation: every head broadcasts one
/// control packet at its farthest-member distance, every member sends one
/// join to its head and receives the broadcast, every head receives each join.
double charge_formation(NetworkState& state, const Clustering& clustering);

/// Energy drawn by one RCFT hop-count exchange from `heads`.
///
/// Each head's advertisement is flooded (every reachable node relays it once)
/// and every node's response is relayed back to each head along the canonical
/// shortest path. Every transmission goes out at radio range and is heard by
/// all of the sender's neighbors.
double charge_hop_exchange(NetworkState& state, std::span<const NodeId> heads);

/// Set-up phase of one round. LEACH and LEACH-C re-form every round; RCFT
/// forms once on its first call and afterwards reuses (and repairs) the frozen
/// clustering at no energy cost. Throws SimulationOver if nobody is alive.
SetupResult setup_phase(NetworkState& state, Protocol protocol, const ProtocolParams& params,
                        long round, RngStream& rng);

/// Steady-state data round: members send one data packet to their head, heads
/// receive, aggregate (members + own reading) and transmit to the base
/// station. Deaths are settled at the end. Does not include formation energy.
RoundReport steady_round(NetworkState& state, const Clustering& clustering, long round);

/// Full deterministic run: field, graph, then set-up + steady state per round
/// until config.rounds or until every node is dead.
ExperimentLog run_experiment(const NetworkConfig& config, Protocol protocol,
                             const ProtocolParams& params);

/// First `rounds` reports of a log.
ExperimentLog truncate_log(const ExperimentLog& log, std::size_t rounds);

}  // namespace rcft
