#include "rcft/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rcft/metrics.hpp"

namespace rcft {
namespace fs = std::filesystem;

std::string format_sig6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

namespace {

std::string optional_field(const std::optional<double>& v) { return v ? format_sig6(*v) : std::string{}; }

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path.string());
  }
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_int(const std::string& s, const fs::path& path, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return value;
}

double parse_double(const std::string& s, const fs::path& path, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

std::vector<std::vector<std::string>> read_rows(const fs::path& path, const char* header,
                                                std::size_t width) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::runtime_error(path.string() + ": unexpected header");
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != width) {
      throw std::runtime_error(path.string() + ":" + std::to_string(n) + ": expected " +
                               std::to_string(width) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

void write_csv(std::span<const ExperimentLog> logs, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir.string());

  std::vector<const ExperimentLog*> ordered;
  for (const auto& log : logs) ordered.push_back(&log);
  std::stable_sort(ordered.begin(), ordered.end(), [](const ExperimentLog* a, const ExperimentLog* b) {
    return std::tuple(to_string(a->protocol), a->config.seed) <
           std::tuple(to_string(b->protocol), b->config.seed);
  });

  std::ostringstream rounds;
  std::ostringstream clusters;
  rounds << kRoundsHeader << '\n';
  clusters << kClustersHeader << '\n';
  for (const ExperimentLog* log : ordered) {
    const std::string proto(to_string(log->protocol));
    for (const auto& r : log->reports) {
      const std::optional<double> size =
          r.clusters.empty() ? std::nullopt
                             : std::optional<double>(static_cast<double>(r.alive_count) /
                                                     static_cast<double>(r.clusters.size()));
      rounds << proto << ',' << log->config.seed << ',' << r.round << ',' << r.alive_count << ','
             << r.clusters.size() << ',' << optional_field(size) << ','
             << optional_field(mean_member_distance(r)) << ',' << format_sig6(r.energy_spent) << ','
             << format_sig6(r.cumulative_mean_energy) << ',' << (r.formation_happened ? 1 : 0) << '\n';

      std::vector<ClusterStat> sorted = r.clusters;
      std::sort(sorted.begin(), sorted.end(),
                [](const ClusterStat& a, const ClusterStat& b) { return a.head < b.head; });
      for (const auto& c : sorted) {
        clusters << proto << ',' << log->config.seed << ',' << r.round << ',' << c.head << ','
                 << c.members << ',' << optional_field(c.mean_distance) << '\n';
      }
    }
  }
  write_atomically(dir / "rounds.csv", rounds.str());
  write_atomically(dir / "clusters.csv", clusters.str());
}

std::vector<ExperimentLog> read_csv(const fs::path& dir) {
  const fs::path rounds_path = dir / "rounds.csv";
  const fs::path clusters_path = dir / "clusters.csv";
  const auto round_rows = read_rows(rounds_path, kRoundsHeader, 10);
  const auto cluster_rows = read_rows(clusters_path, kClustersHeader, 6);

  using Key = std::tuple<std::string, std::uint64_t>;
  std::map<Key, ExperimentLog> logs;
  std::size_t line = 1;
  for (const auto& f : round_rows) {
    ++line;
    const auto protocol = parse_protocol(f[0]);
    if (!protocol) throw std::runtime_error(rounds_path.string() + ": unknown protocol '" + f[0] + "'");
    const auto seed = parse_int<std::uint64_t>(f[1], rounds_path, line);
    ExperimentLog& log = logs[{f[0], seed}];
    log.protocol = *protocol;
    log.config.seed = seed;

    RoundReport r;
    r.protocol = *protocol;
    r.seed = seed;
    r.round = parse_int<long>(f[2], rounds_path, line);
    r.alive_count = parse_int<std::size_t>(f[3], rounds_path, line);
    r.energy_spent = parse_double(f[7], rounds_path, line);
    r.cumulative_mean_energy = parse_double(f[8], rounds_path, line);
    r.formation_happened = f[9] == "1";
    log.reports.push_back(std::move(r));
    log.config.rounds = log.reports.size();
  }

  line = 1;
  for (const auto& f : cluster_rows) {
    ++line;
    const auto seed = parse_int<std::uint64_t>(f[1], clusters_path, line);
    const auto it = logs.find({f[0], seed});
    if (it == logs.end()) throw std::runtime_error(clusters_path.string() + ": cluster row without a round");
    const auto round = parse_int<long>(f[2], clusters_path, line);
    auto& reports = it->second.reports;
    const auto rep = std::find_if(reports.begin(), reports.end(),
                                  [&](const RoundReport& r) { return r.round == round; });
    if (rep == reports.end()) throw std::runtime_error(clusters_path.string() + ": unknown round");
    ClusterStat c;
    c.head = parse_int<NodeId>(f[3], clusters_path, line);
    c.members = parse_int<std::size_t>(f[4], clusters_path, line);
    if (!f[5].empty()) c.mean_distance = parse_double(f[5], clusters_path, line);
    rep->clusters.push_back(c);
  }

  std::vector<ExperimentLog> out;
  for (auto& [key, log] : logs) out.push_back(std::move(log));
  return out;
}

}  // namespace rcft
