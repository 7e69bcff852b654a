#include "rcft/cli/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "rcft/cli/app.hpp"
#include "rcft/cli/args.hpp"
#include "rcft/cli/batch.hpp"
#include "rcft/cli/svg.hpp"
#include "rcft/csv.hpp"

namespace rcft::cli {
namespace {

constexpr Protocol kOrder[] = {Protocol::Leach, Protocol::LeachC, Protocol::Rcft};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s + " ";
}

std::string bucket_label(const Bucket& b) {
  if (b.lo == 0) return "<=" + std::to_string(b.hi);
  if (b.hi == Bucket::kOpen) return ">=" + std::to_string(b.lo);
  return std::to_string(b.lo) + "-" + std::to_string(b.hi);
}

std::string bucket_key(const Bucket& b) {
  if (b.lo == 0) return "le" + std::to_string(b.hi);
  if (b.hi == Bucket::kOpen) return "ge" + std::to_string(b.lo);
  return std::to_string(b.lo) + "_" + std::to_string(b.hi);
}

std::optional<long> crossover(const std::vector<double>& rcft, const std::vector<double>& leach) {
  const std::size_t n = std::min(rcft.size(), leach.size());
  if (n == 0 || !(rcft[n - 1] < leach[n - 1])) return std::nullopt;
  std::size_t i = n - 1;
  while (i > 0 && rcft[i - 1] < leach[i - 1]) --i;
  return static_cast<long>(i + 1);
}

}  // namespace

const ProtocolSummary& SuiteResult::get(Protocol protocol) const {
  for (const auto& p : protocols)
    if (p.protocol == protocol) return p;
  throw std::out_of_range("no results for protocol " + std::string(to_string(protocol)));
}

SuiteResult summarize_suite(const std::vector<ExperimentLog>& logs, std::size_t cluster_rounds) {
  SuiteResult result;
  const auto buckets = default_buckets();
  for (Protocol p : kOrder) {
    auto mine = select(logs, p);
    if (mine.empty()) continue;
    std::vector<ExperimentLog> prefix;
    for (const auto& log : mine) prefix.push_back(truncate_log(log, cluster_rounds));
    result.protocols.push_back({p, summarize(prefix, buckets), mean_energy_series(mine)});
  }
  const auto has = [&](Protocol p) {
    return std::any_of(result.protocols.begin(), result.protocols.end(),
                       [p](const ProtocolSummary& s) { return s.protocol == p; });
  };
  if (has(Protocol::Rcft) && has(Protocol::Leach))
    result.crossover_round = crossover(result.get(Protocol::Rcft).energy, result.get(Protocol::Leach).energy);
  return result;
}

std::string format_summary(const SuiteResult& result, const SuiteOptions& options) {
  const auto& c = options.config;
  std::string s = "rcftsim paper suite\n";
  s += "preset: " + std::to_string(c.node_count) + " nodes, " + num(c.field_width) + " x " + num(c.field_height) +
       " m field, " + std::to_string(c.head_count) + " heads, base station (" + num(c.bs_pos.x) + ", " +
       num(c.bs_pos.y) + "), " + std::to_string(c.data_packet_bits) + "-bit data packets\n";
  const auto seeds = options.seeds.empty() ? derive_seeds(10) : options.seeds;
  s += "seeds: " + std::to_string(seeds.front()) + ".." + std::to_string(seeds.back()) + " (" +
       std::to_string(seeds.size()) + " runs per protocol)\n";
  s += "cluster statistics over rounds 1.." + std::to_string(options.cluster_rounds) +
       "; energy over rounds 1.." + std::to_string(options.energy_rounds) + "\n\n";

  constexpr std::size_t kKey = 30, kCol = 10;
  s += pad("metric", kKey);
  for (Protocol p : kOrder) s += pad(std::string(to_string(p)), kCol);
  s += "reported\n";

  auto row = [&](const std::string& key, auto value_of, const std::string& reported) {
    s += pad(key, kKey);
    for (Protocol p : kOrder) {
      std::string cell = "-";
      for (const auto& ps : result.protocols)
        if (ps.protocol == p) cell = value_of(ps);
      s += pad(cell, kCol);
    }
    s += reported + "\n";
  };

  row("mean_member_distance_m",
      [](const ProtocolSummary& ps) {
        return ps.clusters.mean_member_distance ? num(*ps.clusters.mean_member_distance) : std::string("-");
      },
      "21.11 / 20.68 / 20.88");
  row("mean_nodes_per_cluster",
      [](const ProtocolSummary& ps) { return num(ps.clusters.mean_nodes_per_cluster); },
      "rcft closer to 20 than leach");

  const auto buckets = default_buckets();
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    std::string reported;
    if (buckets[b].lo == 0 || buckets[b].hi == Bucket::kOpen) reported = "frequent for leach";
    if (buckets[b].lo == 16) reported = "rcft almost over 0.5";
    row("frac_clusters_" + bucket_key(buckets[b]),
        [b](const ProtocolSummary& ps) {
          return b < ps.clusters.histogram_fractions.size() ? num(ps.clusters.histogram_fractions[b])
                                                            : std::string("-");
        },
        reported);
  }

  for (std::size_t r : {std::size_t{20}, std::size_t{100}, std::size_t{120}, options.energy_rounds}) {
    std::string reported;
    if (r == 20) reported = "rcft about 2x the others";
    if (r == 100) reported = "leach-c about 20% below leach";
    row("cum_energy_j_round_" + std::to_string(r),
        [r](const ProtocolSummary& ps) { return r <= ps.energy.size() ? num(ps.energy[r - 1]) : std::string("-"); },
        reported);
  }
  s += pad("rcft_below_leach_from_round", kKey) +
       pad(result.crossover_round ? std::to_string(*result.crossover_round) : std::string("none"),
           kCol * 3 + 2) +
       "after 120\n";
  return s;
}

std::vector<std::filesystem::path> write_charts(const SuiteResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  std::vector<double> sizes, distances;
  std::vector<Series> hist, energy;
  std::vector<std::string> bucket_names;
  for (const auto& b : default_buckets()) bucket_names.push_back(bucket_label(b));
  for (const auto& ps : result.protocols) {
    const std::string name(to_string(ps.protocol));
    names.push_back(name);
    sizes.push_back(ps.clusters.mean_nodes_per_cluster);
    distances.push_back(ps.clusters.mean_member_distance.value_or(0.0));
    hist.push_back({name, ps.clusters.histogram_fractions});
    energy.push_back({name, ps.energy});
  }

  const std::vector<std::pair<std::string, std::string>> charts{
      {"nodes_per_cluster.svg",
       bar_chart("Mean nodes per cluster", "nodes", names, {{"nodes per cluster", sizes}})},
      {"cluster_size_histogram.svg",
       bar_chart("Cluster size distribution", "fraction of clusters", bucket_names, hist)},
      {"member_distance.svg",
       bar_chart("Mean head-member distance", "distance (m)", names, {{"distance", distances}})},
      {"energy.svg", line_chart("Cumulative energy per node", "round", "energy (J)", energy)},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [file, svg] : charts) {
    write_file_atomic(dir / file, svg);
    written.push_back(dir / file);
  }
  return written;
}

SuiteResult run_paper_suite(const SuiteOptions& options) {
  if (options.cluster_rounds == 0 || options.energy_rounds < options.cluster_rounds)
    throw std::invalid_argument("energy_rounds must be at least cluster_rounds, and both positive");
  const auto seeds = options.seeds.empty() ? derive_seeds(10) : options.seeds;

  // One long run per (protocol, seed); the short cluster runs are its prefix.
  NetworkConfig config = options.config;
  config.rounds = options.energy_rounds;
  const auto logs = run_batch(config, options.params, kOrder, seeds, options.threads);

  SuiteResult result = summarize_suite(logs, options.cluster_rounds);
  write_csv(logs, options.out_dir);
  result.files = {options.out_dir / "rounds.csv", options.out_dir / "clusters.csv"};
  SuiteOptions effective = options;
  effective.seeds = seeds;
  write_file_atomic(options.out_dir / "summary.txt", format_summary(result, effective));
  result.files.push_back(options.out_dir / "summary.txt");
  for (auto& f : write_charts(result, options.out_dir)) result.files.push_back(std::move(f));
  return result;
}

}  // namespace rcft::cli
