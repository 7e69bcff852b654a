#include "rcft/leach_c.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rcft/errors.hpp"

namespace rcft {
namespace {

// C(n, k), saturating at limit + 1.
std::size_t bounded_binomial(std::size_t n, std::size_t k, std::size_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double c = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::size_t>(c + 0.5L);
}

// Candidate-to-alive-node distances, row per candidate.
struct DistanceTable {
  std::size_t alive = 0;
  std::vector<double> dist;

  DistanceTable(std::span<const SensorNode> nodes, std::span<const NodeId> candidates) {
    std::vector<Point> positions;
    for (const auto& n : nodes) {
      if (n.alive) positions.push_back(n.pos);
    }
    alive = positions.size();
    dist.resize(candidates.size() * alive);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (std::size_t v = 0; v < alive; ++v) {
        dist[c * alive + v] = distance(nodes[candidates[c]].pos, positions[v]);
      }
    }
  }

  const double* row(std::size_t c) const { return &dist[c * alive]; }

  // A head's distance to itself is zero, so summing the minimum over every
  // alive node equals the cost over non-heads.
  double cost(std::span<const std::size_t> slots) const {
    double total = 0.0;
    for (std::size_t v = 0; v < alive; ++v) {
      double best = std::numeric_limits<double>::infinity();
      for (const std::size_t s : slots) best = std::min(best, dist[s * alive + v]);
      total += best;
    }
    return total;
  }
};

std::vector<NodeId> exhaustive_search(std::span<const SensorNode> nodes,
                                      std::span<const NodeId> candidates, std::size_t k) {
  const DistanceTable table(nodes, candidates);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> best;
  double best_cost = std::numeric_limits<double>::infinity();
  const std::size_t n = candidates.size();
  for (;;) {
    const double cost = table.cost(idx);
    if (cost < best_cost) {
      best_cost = cost;
      best = idx;
    }
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<NodeId> heads;
  for (const std::size_t i : best) heads.push_back(candidates[i]);
  std::sort(heads.begin(), heads.end());
  return heads;
}

}  // namespace

double placement_cost(std::span<const SensorNode> nodes, std::span<const NodeId> heads) {
  double total = 0.0;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    if (std::find(heads.begin(), heads.end(), n.id) != heads.end()) continue;
    double best = std::numeric_limits<double>::infinity();
    for (const NodeId h : heads) best = std::min(best, distance(n.pos, nodes[h].pos));
    total += best;
  }
  return total;
}

std::vector<NodeId> leach_c_candidates(std::span<const SensorNode> nodes, std::size_t k) {
  std::vector<NodeId> alive;
  double sum = 0.0;
  for (const auto& n : nodes) {
    if (!n.alive) continue;
    alive.push_back(n.id);
    sum += n.energy;
  }
  if (alive.empty()) return {};
  const double mean = sum / static_cast<double>(alive.size());
  std::vector<NodeId> pool;
  for (const NodeId id : alive) {
    if (nodes[id].energy >= mean) pool.push_back(id);
  }
  return pool.size() >= k ? pool : alive;
}

std::vector<NodeId> leach_c_local_search(std::span<const SensorNode> nodes,
                                         std::span<const NodeId> candidates, std::size_t k,
                                         std::size_t iterations, RngStream& rng) {
  const DistanceTable table(nodes, candidates);
  const std::size_t m = table.alive;

  // Work in candidate indices; ascending index order equals ascending id.
  std::vector<std::size_t> all(candidates.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> slots = rng.sample_without_replacement(all, k);
  std::sort(slots.begin(), slots.end());
  double cost = table.cost(slots);

  std::vector<double> without(m);
  for (std::size_t sweep = 0; sweep < iterations; ++sweep) {
    double best_cost = cost;
    std::size_t best_slot = 0;
    std::size_t best_swap = candidates.size();
    for (std::size_t slot = 0; slot < slots.size(); ++slot) {
      for (std::size_t v = 0; v < m; ++v) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if (s != slot) best = std::min(best, table.dist[slots[s] * m + v]);
        }
        without[v] = best;
      }
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (std::binary_search(slots.begin(), slots.end(), c)) continue;
        const double* row = table.row(c);
        double trial = 0.0;
        for (std::size_t v = 0; v < m; ++v) trial += std::min(without[v], row[v]);
        if (trial < best_cost) {
          best_cost = trial;
          best_slot = slot;
          best_swap = c;
        }
      }
    }
    if (best_swap == candidates.size()) break;
    slots[best_slot] = best_swap;
    std::sort(slots.begin(), slots.end());
    cost = best_cost;
  }

  std::vector<NodeId> heads;
  for (const std::size_t s : slots) heads.push_back(candidates[s]);
  std::sort(heads.begin(), heads.end());
  return heads;
}

std::vector<NodeId> leach_c_elect(std::span<const SensorNode> nodes, std::size_t k,
                                  std::size_t iterations, RngStream& rng) {
  const auto alive = static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const SensorNode& n) { return n.alive; }));
  if (k == 0) throw DomainError("leach_c_elect: k must be positive");
  if (k > alive) {
    throw DomainError("leach_c_elect: k=" + std::to_string(k) + " exceeds alive count " +
                      std::to_string(alive));
  }
  const std::vector<NodeId> pool = leach_c_candidates(nodes, k);
  if (bounded_binomial(pool.size(), k, kExhaustiveLimit) <= kExhaustiveLimit) {
    return exhaustive_search(nodes, pool, k);
  }
  return leach_c_local_search(nodes, pool, k, iterations, rng);
}

}  // namespace rcft
