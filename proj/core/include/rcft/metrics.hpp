#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rcft/clustering.hpp"
#include "rcft/engine.hpp"

namespace rcft {

enum class DistanceWeighting {
  PerCluster,  // unweighted mean of per-cluster means
  PerMember,   // every member counts once
};

/// Mean head-member Euclidean distance. Memberless clusters are excluded;
/// returns nullopt when no cluster has a member.
std::optional<double> mean_member_distance(const Clustering& clustering,
                                           std::span<const SensorNode> nodes,
                                           DistanceWeighting weighting = DistanceWeighting::PerCluster);

/// Same metric computed from a round report's cluster stats.
std::optional<double> mean_member_distance(const RoundReport& report,
                                           DistanceWeighting weighting = DistanceWeighting::PerCluster);

/// Inclusive member-count range.
struct Bucket {
  static constexpr std::size_t kOpen = std::numeric_limits<std::size_t>::max();

  std::size_t lo = 0;
  std::size_t hi = kOpen;

  bool contains(std::size_t n) const noexcept { return n >= lo && n <= hi; }
  friend bool operator==(const Bucket&, const Bucket&) = default;
};

/// <=10, 11-15, 16-25, 26-30, >=31
std::vector<Bucket> default_buckets();

/// Throws ConfigError unless the buckets partition the non-negative integers
/// in ascending order.
void validate_buckets(std::span<const Bucket> buckets);

struct SizeHistogram {
  std::vector<Bucket> buckets;
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  std::vector<double> fractions() const;
};

/// Every cluster of every report in every log adds its member count to one
/// bucket. Throws DomainError on an empty log list.
SizeHistogram size_histogram(std::span<const ExperimentLog> logs,
                             std::span<const Bucket> buckets);

/// Cumulative network spend per initial node, one value per round.
std::vector<double> energy_series(const ExperimentLog& log);

/// Per-round mean of energy_series() across logs.
std::vector<double> mean_energy_series(std::span<const ExperimentLog> logs);

struct SummaryStats {
  double mean_nodes_per_cluster = 0.0;  // mean over rounds of alive / clusters (head included)
  std::optional<double> mean_member_distance;  // pooled per-cluster means
  std::vector<double> energy_series;
  SizeHistogram histogram;
  std::vector<double> histogram_fractions;
};

/// Throws DomainError on an empty log list.
SummaryStats summarize(std::span<const ExperimentLog> logs,
                       std::span<const Bucket> buckets);

}  // namespace rcft
