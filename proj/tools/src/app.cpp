#include "rcft/cli/app.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "rcft/cli/batch.hpp"
#include "rcft/cli/config_file.hpp"
#include "rcft/cli/suite.hpp"
#include "rcft/csv.hpp"
#include "rcft/errors.hpp"

namespace rcft::cli {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void print_table(const SuiteResult& result, std::ostream& out) {
  out << "protocol  mean_distance_m  nodes_per_cluster  frac_16_25  final_energy_j\n";
  for (const auto& ps : result.protocols) {
    char line[160];
    std::snprintf(line, sizeof line, "%-9s %-16s %-18s %-11s %s\n", std::string(to_string(ps.protocol)).c_str(),
                  ps.clusters.mean_member_distance ? num(*ps.clusters.mean_member_distance).c_str() : "-",
                  num(ps.clusters.mean_nodes_per_cluster).c_str(),
                  num(ps.clusters.histogram_fractions.at(2)).c_str(),
                  ps.energy.empty() ? "-" : num(ps.energy.back()).c_str());
    out << line;
  }
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error(tmp.string() + ": cannot open for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error(tmp.string() + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error(path.string() + ": " + ec.message());
}

void execute(const RunSpec& spec, std::ostream& out) {
  switch (spec.command) {
    case Command::Simulate:
    case Command::Compare: {
      const LoadedConfig loaded = load_config(spec.config_path, spec.overrides);
      const auto seeds = spec.seeds.empty() ? std::vector<std::uint64_t>{loaded.config.seed} : spec.seeds;
      const auto logs = run_batch(loaded.config, loaded.params, spec.protocols, seeds, spec.threads);
      write_csv(logs, spec.out_dir);
      const SuiteResult result = summarize_suite(logs, loaded.config.rounds);
      if (spec.command == Command::Compare) write_charts(result, spec.out_dir);
      out << logs.size() << " run(s), " << loaded.config.rounds << " rounds, seeds " << seeds.front() << ".."
          << seeds.back() << "\n";
      print_table(result, out);
      out << "wrote " << (spec.out_dir / "rounds.csv").string() << " and "
          << (spec.out_dir / "clusters.csv").string() << "\n";
      break;
    }
    case Command::PaperSuite: {
      SuiteOptions options;
      options.out_dir = spec.out_dir;
      options.seeds = spec.seeds;
      options.threads = spec.threads;
      const SuiteResult result = run_paper_suite(options);
      out << format_summary(result, options);
      out << "wrote " << result.files.size() << " files to " << spec.out_dir.string() << "\n";
      break;
    }
    case Command::Plot: {
      const auto logs = read_csv(spec.in_dir);
      const auto files = write_charts(summarize_suite(logs, spec.cluster_rounds), spec.out_dir);
      out << "wrote " << files.size() << " charts to " << spec.out_dir.string() << "\n";
      break;
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    execute(parse_args(args), out);
    return kExitOk;
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'rcftsim --help' for the flag reference\n";
    return kExitUsage;
  } catch (const ConfigFileError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace rcft::cli
