#include "rcft/metrics.hpp"

#include <algorithm>
#include <string>

#include "rcft/errors.hpp"

namespace rcft {

std::optional<double> mean_member_distance(const Clustering& clustering,
                                           std::span<const SensorNode> nodes,
                                           DistanceWeighting weighting) {
  double total = 0.0;
  std::size_t count = 0;
  for (const NodeId head : clustering.heads) {
    double sum = 0.0;
    std::size_t members = 0;
    for (const NodeId m : clustering.members(head)) {
      sum += distance(nodes[m].pos, nodes[head].pos);
      ++members;
    }
    if (members == 0) continue;
    if (weighting == DistanceWeighting::PerCluster) {
      total += sum / static_cast<double>(members);
      ++count;
    } else {
      total += sum;
      count += members;
    }
  }
  if (count == 0) return std::nullopt;
  return total / static_cast<double>(count);
}

std::optional<double> mean_member_distance(const RoundReport& report, DistanceWeighting weighting) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& c : report.clusters) {
    if (!c.mean_distance) continue;
    if (weighting == DistanceWeighting::PerCluster) {
      total += *c.mean_distance;
      ++count;
    } else {
      total += *c.mean_distance * static_cast<double>(c.members);
      count += c.members;
    }
  }
  if (count == 0) return std::nullopt;
  return total / static_cast<double>(count);
}

std::vector<Bucket> default_buckets() {
  return {{0, 10}, {11, 15}, {16, 25}, {26, 30}, {31, Bucket::kOpen}};
}

void validate_buckets(std::span<const Bucket> buckets) {
  if (buckets.empty()) throw ConfigError("buckets", "at least one bucket is required");
  std::size_t expect = 0;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const Bucket& b = buckets[i];
    if (b.hi < b.lo) throw ConfigError("buckets", "bucket " + std::to_string(i) + " is empty");
    if (b.lo < expect) throw ConfigError("buckets", "bucket " + std::to_string(i) + " overlaps its predecessor");
    if (b.lo > expect) throw ConfigError("buckets", "gap before bucket " + std::to_string(i));
    if (b.hi == Bucket::kOpen) {
      if (i + 1 != buckets.size()) throw ConfigError("buckets", "only the last bucket may be open");
      return;
    }
    expect = b.hi + 1;
  }
  throw ConfigError("buckets", "last bucket must be open-ended");
}

std::vector<double> SizeHistogram::fractions() const {
  std::vector<double> out(counts.size(), 0.0);
  if (total == 0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return out;
}

SizeHistogram size_histogram(std::span<const ExperimentLog> logs, std::span<const Bucket> buckets) {
  if (logs.empty()) throw DomainError("size_histogram: no logs");
  validate_buckets(buckets);
  SizeHistogram h;
  h.buckets.assign(buckets.begin(), buckets.end());
  h.counts.assign(buckets.size(), 0);
  for (const auto& log : logs) {
    for (const auto& report : log.reports) {
      for (const auto& c : report.clusters) {
        const auto it = std::find_if(buckets.begin(), buckets.end(),
                                     [&](const Bucket& b) { return b.contains(c.members); });
        ++h.counts[static_cast<std::size_t>(it - buckets.begin())];
        ++h.total;
      }
    }
  }
  return h;
}

std::vector<double> energy_series(const ExperimentLog& log) {
  std::vector<double> out;
  out.reserve(log.reports.size());
  for (const auto& r : log.reports) out.push_back(r.cumulative_mean_energy);
  return out;
}

std::vector<double> mean_energy_series(std::span<const ExperimentLog> logs) {
  std::size_t length = 0;
  for (const auto& log : logs) length = std::max(length, log.reports.size());
  std::vector<double> sum(length, 0.0);
  std::vector<std::size_t> n(length, 0);
  for (const auto& log : logs) {
    for (std::size_t i = 0; i < log.reports.size(); ++i) {
      sum[i] += log.reports[i].cumulative_mean_energy;
      ++n[i];
    }
  }
  for (std::size_t i = 0; i < length; ++i) sum[i] /= static_cast<double>(n[i]);
  return sum;
}

SummaryStats summarize(std::span<const ExperimentLog> logs, std::span<const Bucket> buckets) {
  if (logs.empty()) throw DomainError("summarize: no logs");
  SummaryStats s;

  double size_sum = 0.0;
  std::size_t size_rounds = 0;
  double dist_sum = 0.0;
  std::size_t dist_count = 0;
  for (const auto& log : logs) {
    for (const auto& r : log.reports) {
      if (!r.clusters.empty()) {
        size_sum += static_cast<double>(r.alive_count) / static_cast<double>(r.clusters.size());
        ++size_rounds;
      }
      for (const auto& c : r.clusters) {
        if (!c.mean_distance) continue;
        dist_sum += *c.mean_distance;
        ++dist_count;
      }
    }
  }
  if (size_rounds > 0) s.mean_nodes_per_cluster = size_sum / static_cast<double>(size_rounds);
  if (dist_count > 0) s.mean_member_distance = dist_sum / static_cast<double>(dist_count);
  s.energy_series = mean_energy_series(logs);
  s.histogram = size_histogram(logs, buckets);
  s.histogram_fractions = s.histogram.fractions();
  return s;
}

}  // namespace rcft
