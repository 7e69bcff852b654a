#include "support/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>

#include "rcft/csv.hpp"
#include "rcft/engine.hpp"
#include "rcft/field.hpp"
#include "rcft/leach.hpp"
#include "rcft/leach_c.hpp"
#include "rcft/rcft.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace rcft::testing {

namespace {

struct Gen {
  std::mt19937_64 engine;
  explicit Gen(std::uint64_t seed) : engine(seed) {}
  double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
  double real(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }

  std::vector<NodeId> distinct(std::size_t k, const std::vector<SensorNode>& nodes) {
    std::vector<NodeId> alive;
    for (const auto& x : nodes)
      if (x.alive) alive.push_back(x.id);
    std::shuffle(alive.begin(), alive.end(), engine);
    alive.resize(std::min(k, alive.size()));
    return alive;
  }

  std::vector<SensorNode> nodes(std::size_t n, double side, double dead_fraction = 0.0) {
    auto out = random_nodes(n, side, side, engine());
    for (auto& x : out) {
      x.energy = real(0.5, 2.0);
      if (unit() < dead_fraction) x.alive = false, x.energy = 0.0;
    }
    return out;
  }
};

void fail(CorpusResult& r, const std::string& what) {
  if (r.violations++ == 0) r.first_failure = what;
}

// Node sets (head plus members) of a clustering, restricted to the living.
std::set<std::set<NodeId>> cluster_sets(const Clustering& c, std::span<const SensorNode> nodes) {
  std::set<std::set<NodeId>> out;
  for (NodeId h : c.heads) {
    std::set<NodeId> s;
    if (nodes[h].alive) s.insert(h);
    for (NodeId m : c.members(h))
      if (nodes[m].alive) s.insert(m);
    if (!s.empty()) out.insert(s);
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CorpusResult hop_distance_corpus() {
  Gen gen(101);
  CorpusResult r;
  for (int graph = 0; graph < 200; ++graph) {
    const std::size_t n = gen.between(1, 30);
    const double range = gen.real(10.0, 40.0);
    const auto nodes = gen.nodes(n, gen.real(30.0, 120.0), graph % 4 == 0 ? 0.2 : 0.0);
    const auto g = build_graph(nodes, range);
    const auto apsp = floyd_warshall(nodes, range);
    for (const auto& s : nodes) {
      if (!s.alive) continue;
      const auto f = hop_distances(g, s.id);
      for (const auto& t : nodes) {
        ++r.cases;
        if (f.at(t.id) != apsp[s.id][t.id])
          fail(r, "graph " + std::to_string(graph) + " " + std::to_string(s.id) + "->" + std::to_string(t.id));
      }
    }
  }
  return r;
}

CorpusResult step_toward_corpus() {
  Gen gen(102);
  CorpusResult r;
  for (int graph = 0; graph < 100; ++graph) {
    const auto nodes = gen.nodes(gen.between(2, 30), 80.0);
    const double range = gen.real(15.0, 35.0);
    const auto g = build_graph(nodes, range);
    const auto apsp = floyd_warshall(nodes, range);
    for (int q = 0; q < 10; ++q) {
      const auto a = static_cast<NodeId>(gen.index(nodes.size()));
      const auto b = static_cast<NodeId>(gen.index(nodes.size()));
      const int d = apsp[a][b];
      if (d == kInf) continue;
      ++r.cases;
      const std::string where = "graph " + std::to_string(graph) + " query " + std::to_string(q);
      // Oracle: walk the lexicographically smallest shortest path.
      NodeId at = a;
      for (int s = 1; s <= d + 1; ++s) {
        if (at != b) {
          for (NodeId v = 0; v < nodes.size(); ++v)
            if (apsp[at][v] == 1 && apsp[v][b] == apsp[at][b] - 1) {
              at = v;
              break;
            }
        }
        if (step_toward(g, a, b, static_cast<std::size_t>(s)) != at) fail(r, where);
      }
      // Triangle step.
      if (d >= 1 && apsp[step_toward(g, a, b, 1)][b] != d - 1) fail(r, where + " triangle");
    }
  }
  return r;
}

CorpusResult assignment_corpus() {
  Gen gen(103);
  CorpusResult r;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t n = gen.between(2, 60);
    const double range = gen.real(10.0, 40.0);
    const auto nodes = gen.nodes(n, 100.0, inst % 3 == 0 ? 0.15 : 0.0);
    const auto heads = gen.distinct(gen.between(1, 6), nodes);
    if (heads.empty()) continue;
    ++r.cases;
    const auto g = build_graph(nodes, range);
    const auto apsp = floyd_warshall(nodes, range);
    if (assign_by_distance(heads, nodes).member_of != nearest_head(nodes, heads))
      fail(r, "distance, instance " + std::to_string(inst));
    if (assign_by_hops(heads, g, nodes).member_of != min_hop_head(nodes, heads, apsp))
      fail(r, "hops, instance " + std::to_string(inst));
  }
  return r;
}

CorpusResult leach_c_corpus() {
  Gen gen(104);
  CorpusResult r;
  {
    const auto line = nodes_at({{0, 0}, {1, 0}, {2, 0}, {10, 0}, {11, 0}, {12, 0}});
    RngStream rng(1, "election");
    ++r.cases;
    if (leach_c_elect(line, 2, 50, rng) != std::vector<NodeId>{1, 4}) fail(r, "six-point line");
  }
  for (int inst = 0; inst < 50; ++inst) {
    const std::size_t n = gen.between(3, 12);
    const std::size_t k = gen.between(1, std::min<std::size_t>(3, n));
    const auto nodes = gen.nodes(n, 100.0);
    RngStream rng(static_cast<std::uint64_t>(inst), "election");
    const auto got = leach_c_elect(nodes, k, 50, rng);
    const auto oracle = exhaustive_placement(nodes, energy_candidates(nodes, k), k);
    ++r.cases;
    const double cost = placement_objective(nodes, got);
    if (std::abs(cost - oracle.cost) > 1e-9 || (oracle.optimal_sets == 1 && got != oracle.best))
      fail(r, "instance " + std::to_string(inst));
  }
  return r;
}

CorpusResult local_search_corpus() {
  // The exhaustive branch hides the local search on small pools; exercise it directly.
  Gen gen(105);
  CorpusResult r;
  for (int inst = 0; inst < 50; ++inst) {
    const std::size_t n = gen.between(4, 12);
    const auto nodes = gen.nodes(n, 100.0);
    std::vector<NodeId> pool(n);
    for (NodeId i = 0; i < n; ++i) pool[i] = i;
    RngStream rng(static_cast<std::uint64_t>(inst), "election");
    const auto got = leach_c_local_search(nodes, pool, 2, 50, rng);
    const auto oracle = exhaustive_placement(nodes, pool, 2);
    ++r.cases;
    const double cost = placement_objective(nodes, got);
    if (cost > oracle.cost + 1e-9) ++r.extra;
    if (cost < oracle.cost - 1e-9) fail(r, "beat the optimum, instance " + std::to_string(inst));
    for (std::size_t slot = 0; slot < got.size(); ++slot)
      for (NodeId c : pool) {
        if (std::find(got.begin(), got.end(), c) != got.end()) continue;
        auto trial = got;
        trial[slot] = c;
        if (placement_objective(nodes, trial) < cost - 1e-9) fail(r, "improving swap, instance " + std::to_string(inst));
      }
  }
  return r;
}

CorpusResult formation_fuzz() {
  Gen gen(106);
  CorpusResult r;
  int run = 0;
  while (r.cases < 1000) {
    NetworkConfig config;
    config.node_count = gen.between(5, 120);
    config.field_width = gen.real(30.0, 150.0);
    config.field_height = gen.real(30.0, 150.0);
    config.head_count = gen.between(1, std::min<std::size_t>(8, config.node_count));
    config.radio_range = gen.real(10.0, 40.0);
    config.initial_energy = gen.real(0.002, 0.05);  // deaths within a few rounds
    config.seed = static_cast<std::uint64_t>(++run);
    ProtocolParams params;
    params.p = config.head_fraction();
    params.rcft_move_rule = gen.unit() < 0.5 ? MoveRule::Half : MoveRule::Full;
    const auto protocol = static_cast<Protocol>(run % 3);

    RngStream placement(config.seed, "placement");
    NetworkState state(config, generate_field(config, placement));
    RngStream election(config.seed, "election");
    for (long round = 0; round < 15 && state.alive_count() > 0; ++round) {
      const auto setup = setup_phase(state, protocol, params, round, election);
      r.cases += setup.formed;
      try {
        validate_clustering(setup.clustering, state.nodes());
      } catch (const std::exception& e) {
        fail(r, std::string(to_string(protocol)) + " run " + std::to_string(run) + " round " +
                    std::to_string(round) + ": " + e.what());
      }
      steady_round(state, setup.clustering, round);
    }
  }
  return r;
}

CorpusResult recenter_fuzz() {
  Gen gen(107);
  CorpusResult r;
  for (int c = 0; c < 1000; ++c) {
    const std::size_t n = gen.between(4, 40);
    const double range = gen.real(12.0, 35.0);
    const auto nodes = gen.nodes(n, 100.0);
    const auto g = build_graph(nodes, range);
    auto heads = gen.distinct(gen.between(2, std::min<std::size_t>(5, n)), nodes);
    std::sort(heads.begin(), heads.end());
    const auto clustering = assign_by_hops(heads, g, nodes);
    ProtocolParams params;
    params.rcft_move_rule = c % 2 ? MoveRule::Half : MoveRule::Full;
    const NodeId head = heads[gen.index(heads.size())];
    const auto d = rcft_recenter_one(head, heads, clustering, g, params);
    ++r.cases;

    bool ok = d.head == head && d.steps_moved <= std::abs(d.tl);
    if (d.stay_reason == StayReason::None) {
      ok = ok && d.tl == d.closest_head_hops - d.farthest_member_hops;
      const auto apsp = floyd_warshall(nodes, range);
      std::vector<NodeId> reachable_members;
      for (NodeId m : clustering.members(head))
        if (apsp[head][m] != kInf) reachable_members.push_back(m);
      ok = ok && d.tl == tl_by_definition(head, heads, reachable_members, apsp);
    }
    if (d.tl > 0) ok = ok && d.direction == Direction::TowardClosestHead;
    if (d.tl < 0) ok = ok && d.direction == Direction::TowardFarthestMember;
    if (d.tl == 0) ok = ok && d.direction == Direction::Stay && d.new_head == head && d.steps_moved == 0;
    ok = ok && (d.new_head == head || std::find(heads.begin(), heads.end(), d.new_head) == heads.end());
    if (!ok) fail(r, "case " + std::to_string(c) + " head " + std::to_string(head) + " tl " + std::to_string(d.tl));
  }
  return r;
}

CorpusResult rcft_frozen_corpus() {
  // Heads may die and hand over, but no node ever changes cluster.
  Gen gen(108);
  CorpusResult r;
  for (int run = 1; run <= 30; ++run) {
    NetworkConfig config;
    config.node_count = gen.between(20, 120);
    config.head_count = gen.between(1, 6);
    config.radio_range = gen.real(15.0, 35.0);
    config.seed = static_cast<std::uint64_t>(run);
    ProtocolParams params;
    params.p = config.head_fraction();
    RngStream placement(config.seed, "placement");
    NetworkState state(config, generate_field(config, placement));
    RngStream election(config.seed, "election");
    std::optional<Clustering> first;
    for (long round = 0; round < 60 && state.alive_count() > 0; ++round) {
      const auto setup = setup_phase(state, Protocol::Rcft, params, round, election);
      if (!first) first = setup.clustering;
      ++r.cases;
      r.extra += setup.clustering.heads != first->heads;
      if (cluster_sets(setup.clustering, state.nodes()) != cluster_sets(*first, state.nodes()))
        fail(r, "run " + std::to_string(run) + " round " + std::to_string(round));
      steady_round(state, setup.clustering, round);
    }
    if (state.formation_count() != 1) fail(r, "run " + std::to_string(run) + " formed more than once");
  }
  return r;
}

CorpusResult leach_rotation_corpus() {
  // Within an epoch nobody heads twice while unused nodes remain; when the
  // pool runs dry early (few nodes, or a burst of volunteers) the forced head
  // must come from somewhere. Every node still heads at least once per epoch.
  Gen gen(109);
  CorpusResult r;
  for (int run = 1; run <= 40; ++run) {
    const std::size_t n = gen.between(10, 150);
    const double p = std::vector<double>{0.05, 0.1, 0.2, 0.25, 0.07, 0.3}[gen.index(6)];
    auto nodes = random_nodes(n, 100, 100, static_cast<std::uint64_t>(run));
    ProtocolParams params;
    params.p = p;
    LeachHistory history(n);
    RngStream rng(static_cast<std::uint64_t>(run), "election");
    const auto epoch = static_cast<long>(leach_epoch_length(p));
    std::vector<int> count(n, 0);
    for (long round = 0; round < 3 * epoch; ++round) {
      if (round % epoch == 0) std::fill(count.begin(), count.end(), 0);
      const bool pool_left = std::count(count.begin(), count.end(), 0) > 0;
      r.extra += !pool_left;
      ++r.cases;
      for (NodeId h : leach_elect(nodes, round, params, history, rng))
        if (++count[h] > 1 && pool_left)
          fail(r, "run " + std::to_string(run) + " round " + std::to_string(round) + " node " + std::to_string(h));
      if (round % epoch == epoch - 1)
        for (NodeId id = 0; id < n; ++id)
          if (count[id] < 1) fail(r, "run " + std::to_string(run) + " node " + std::to_string(id) + " never headed");
    }
  }
  return r;
}

CorpusResult replay_corpus() {
  CorpusResult r;
  const auto base = std::filesystem::temp_directory_path() /
                    ("rcft-replay-" + std::to_string(std::random_device{}()));
  for (auto protocol : {Protocol::Leach, Protocol::LeachC, Protocol::Rcft})
    for (std::uint64_t seed : {1u, 17u, 99u}) {
      std::string bytes[2][2];
      for (int copy = 0; copy < 2; ++copy) {
        const auto log = run_experiment(preset(60, seed), protocol, ProtocolParams{});
        const auto dir = base / std::to_string(copy);
        write_csv(std::span<const ExperimentLog>(&log, 1), dir);
        bytes[copy][0] = slurp(dir / "rounds.csv");
        bytes[copy][1] = slurp(dir / "clusters.csv");
      }
      ++r.cases;
      if (bytes[0][0].empty() || bytes[0][0] != bytes[1][0] || bytes[0][1] != bytes[1][1])
        fail(r, std::string(to_string(protocol)) + " seed " + std::to_string(seed));
    }
  std::filesystem::remove_all(base);
  return r;
}

}  // namespace rcft::testing
