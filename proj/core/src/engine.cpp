#include "rcft/engine.hpp"

#include <algorithm>
#include <string>

#include "rcft/errors.hpp"
#include "rcft/field.hpp"
#include "rcft/leach_c.hpp"
#include "rcft/radio.hpp"
#include "rcft/rcft.hpp"

namespace rcft {

NetworkState::NetworkState(NetworkConfig config, std::vector<SensorNode> nodes)
    : config_(std::move(config)),
      nodes_(std::move(nodes)),
      history_(nodes_.size()),
      death_round_(nodes_.size(), ExperimentLog::kAlive) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != i) throw DomainError("NetworkState: node ids must be dense and ordered");
  }
  graph_ = build_graph(nodes_, config_.radio_range);
}

std::size_t NetworkState::alive_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const SensorNode& n) { return n.alive; }));
}

double NetworkState::total_energy() const {
  double total = 0.0;
  for (const auto& n : nodes_) total += n.energy;
  return total;
}

double NetworkState::spend(NodeId id, double joules) {
  SensorNode& n = nodes_.at(id);
  if (!n.alive || joules <= 0.0) return 0.0;
  const double drawn = std::min(joules, n.energy);
  n.energy -= drawn;
  return drawn;
}

std::size_t NetworkState::settle_deaths(long round) {
  std::size_t died = 0;
  for (auto& n : nodes_) {
    if (n.alive && n.energy <= 0.0) {
      n.alive = false;
      n.energy = 0.0;
      death_round_[n.id] = round;
      ++died;
    }
  }
  if (died > 0) graph_ = build_graph(nodes_, config_.radio_range);
  return died;
}

Clustering repair_clustering(const Clustering& clustering, std::span<const SensorNode> nodes) {
  Clustering out;
  out.formed_at_round = clustering.formed_at_round;
  out.protocol = clustering.protocol;
  out.member_of.assign(nodes.size(), kNoNode);

  for (const NodeId head : clustering.heads) {
    std::vector<NodeId> members;
    for (const NodeId m : clustering.members(head)) {
      if (nodes[m].alive) members.push_back(m);
    }
    NodeId new_head = head;
    if (!nodes[head].alive) {
      if (members.empty()) continue;
      new_head = members.front();
      for (const NodeId m : members) {
        if (nodes[m].energy > nodes[new_head].energy) new_head = m;
      }
    }
    out.heads.push_back(new_head);
    for (const NodeId m : members) {
      if (m != new_head) out.member_of[m] = new_head;
    }
  }
  std::sort(out.heads.begin(), out.heads.end());
  return out;
}

double charge_formation(NetworkState& state, const Clustering& clustering) {
  const auto& cfg = state.config();
  const std::int64_t bits = cfg.control_packet_bits;
  const auto nodes = state.nodes();
  double spent = 0.0;
  for (const NodeId head : clustering.heads) {
    double reach = 0.0;
    std::size_t joined = 0;
    for (const NodeId m : clustering.members(head)) {
      const double d = distance(nodes[m].pos, nodes[head].pos);
      reach = std::max(reach, d);
      spent += state.spend(m, tx_energy(cfg.radio, bits, d) + rx_energy(cfg.radio, bits));
      ++joined;
    }
    spent += state.spend(head, tx_energy(cfg.radio, bits, reach) +
                                   static_cast<double>(joined) * rx_energy(cfg.radio, bits));
  }
  return spent;
}

double charge_hop_exchange(NetworkState& state, std::span<const NodeId> heads) {
  const auto& cfg = state.config();
  const auto& graph = state.graph();
  const double tx = tx_energy(cfg.radio, cfg.control_packet_bits, cfg.radio_range);
  const double rx = rx_energy(cfg.radio, cfg.control_packet_bits);

  // Transmissions per node: one relay of every head's advertisement, plus every
  // response routed through it on the way back to each head.
  std::vector<double> sends(graph.id_bound(), 0.0);
  std::vector<double> routed(graph.id_bound(), 0.0);
  std::vector<NodeId> order;
  for (const NodeId head : heads) {
    const HopField field = hop_distances(graph, head);
    order.clear();
    for (const NodeId v : graph.node_ids()) {
      if (!field.reachable(v)) continue;
      sends[v] += 1.0;
      order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return field.at(a) > field.at(b); });
    std::fill(routed.begin(), routed.end(), 0.0);
    for (const NodeId v : order) {
      if (v == head) continue;
      routed[v] += 1.0;  // its own response
      sends[v] += routed[v];
      // Same canonical parent as step_toward(): lowest-id neighbor one hop closer.
      for (const NodeId u : graph.neighbors(v)) {
        if (field.at(u) == field.at(v) - 1) {
          if (u != head) routed[u] += routed[v];
          break;
        }
      }
    }
  }

  double spent = 0.0;
  for (const NodeId v : graph.node_ids()) {
    double heard = 0.0;
    for (const NodeId u : graph.neighbors(v)) heard += sends[u];
    spent += state.spend(v, sends[v] * tx + heard * rx);
  }
  return spent;
}

SetupResult setup_phase(NetworkState& state, Protocol protocol, const ProtocolParams& params,
                        long round, RngStream& rng) {
  const std::size_t alive = state.alive_count();
  if (alive == 0) throw SimulationOver("setup_phase: every node is dead");

  SetupResult result;
  switch (protocol) {
    case Protocol::Leach: {
      const auto heads = leach_elect(state.nodes(), round, params, state.history(), rng);
      result.clustering = assign_by_distance(heads, state.nodes());
      result.formed = true;
      break;
    }
    case Protocol::LeachC: {
      const std::size_t k = std::min(state.config().head_count, alive);
      const auto heads = leach_c_elect(state.nodes(), k, params.leach_c_iterations, rng);
      result.clustering = assign_by_distance(heads, state.nodes());
      result.formed = true;
      break;
    }
    case Protocol::Rcft: {
      if (state.frozen()) {
        result.clustering = repair_clustering(*state.frozen(), state.nodes());
        state.freeze(result.clustering);
        break;
      }
      RcftFormation formation = rcft_form(state.nodes(), state.graph(), params, rng);
      formation.initial.formed_at_round = static_cast<int>(round);
      formation.clustering.formed_at_round = static_cast<int>(round);
      result.clustering = formation.clustering;
      result.formed = true;
      state.freeze(formation.clustering);
      // Initial and re-centered assignments each cost a full formation, and
      // every head set the passes evaluated costs one hop-count exchange.
      result.formation_energy += charge_formation(state, formation.initial);
      for (const auto& heads : formation.head_sets) {
        result.formation_energy += charge_hop_exchange(state, heads);
      }
      break;
    }
  }
  result.clustering.protocol = protocol;
  if (result.formed) {
    result.clustering.formed_at_round = static_cast<int>(round);
    result.formation_energy += charge_formation(state, result.clustering);
    state.count_formation();
  }
  validate_clustering(result.clustering, state.nodes());
  state.add_spent(result.formation_energy);
  return result;
}

RoundReport steady_round(NetworkState& state, const Clustering& clustering, long round) {
  const auto& cfg = state.config();
  const auto nodes = state.nodes();
  const std::int64_t bits = cfg.data_packet_bits;

  RoundReport report;
  report.round = round;
  report.seed = cfg.seed;
  report.protocol = clustering.protocol;
  report.alive_count = state.alive_count();

  double spent = 0.0;
  for (const NodeId head : clustering.heads) {
    if (!nodes[head].alive) continue;
    ClusterStat stat;
    stat.head = head;
    double distance_sum = 0.0;
    for (const NodeId m : clustering.members(head)) {
      if (!nodes[m].alive) continue;
      const double d = distance(nodes[m].pos, nodes[head].pos);
      spent += state.spend(m, tx_energy(cfg.radio, bits, d));
      distance_sum += d;
      ++stat.members;
    }
    if (stat.members > 0) distance_sum /= static_cast<double>(stat.members);
    if (stat.members > 0) stat.mean_distance = distance_sum;

    const auto received = static_cast<double>(stat.members) * rx_energy(cfg.radio, bits);
    const double fused =
        aggregate_energy(cfg.radio, bits, static_cast<std::int64_t>(stat.members) + 1);
    const double uplink = tx_energy(cfg.radio, bits, distance(nodes[head].pos, cfg.bs_pos));
    spent += state.spend(head, received + fused + uplink);
    report.clusters.push_back(stat);
  }

  state.settle_deaths(round);
  state.add_spent(spent);
  report.energy_spent = spent;
  report.cumulative_mean_energy =
      cfg.node_count == 0 ? 0.0 : state.cumulative_spent() / static_cast<double>(cfg.node_count);
  return report;
}

ExperimentLog run_experiment(const NetworkConfig& config, Protocol protocol,
                             const ProtocolParams& params) {
  config.validate();
  params.validate();

  ExperimentLog log;
  log.config = config;
  log.params = params;
  log.protocol = protocol;

  RngStream placement(config.seed, "placement");
  NetworkState state(config, generate_field(config, placement));
  RngStream election(config.seed, "election");

  for (std::size_t r = 0; r < config.rounds; ++r) {
    if (state.alive_count() == 0) break;
    const auto round = static_cast<long>(r);
    SetupResult setup = setup_phase(state, protocol, params, round, election);
    RoundReport report = steady_round(state, setup.clustering, round);
    report.protocol = protocol;
    report.formation_energy = setup.formation_energy;
    report.energy_spent += setup.formation_energy;
    report.formation_happened = setup.formed;
    log.reports.push_back(std::move(report));
  }
  log.death_round = state.death_round();
  log.formation_count = state.formation_count();
  return log;
}

ExperimentLog truncate_log(const ExperimentLog& log, std::size_t rounds) {
  ExperimentLog out = log;
  if (out.reports.size() > rounds) out.reports.resize(rounds);
  out.config.rounds = std::min(out.config.rounds, rounds);
  out.formation_count = static_cast<std::size_t>(std::count_if(
      out.reports.begin(), out.reports.end(), [](const RoundReport& r) { return r.formation_happened; }));
  for (auto& d : out.death_round) {
    if (d != ExperimentLog::kAlive && d >= static_cast<long>(rounds)) d = ExperimentLog::kAlive;
  }
  return out;
}

}  // namespace rcft
