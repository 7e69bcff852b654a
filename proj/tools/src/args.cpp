#include "rcft/cli/args.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <thread>

#include "rcft/cli/config_file.hpp"

namespace rcft::cli {

std::vector<std::uint64_t> derive_seeds(std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = kSeedBase + i;
  return seeds;
}

namespace {

const std::vector<std::string> kProtocolNames{"leach", "leach-c", "rcft"};

std::size_t default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void add_config_flags(CLI::App* cmd, std::string& config, std::vector<std::string>& sets) {
  cmd->add_option("--config", config, "key=value config file")->check(CLI::ExistingFile);
  cmd->add_option("--set", sets, "override one config key (key=value, repeatable)")
      ->allow_extra_args(false)
      ->check([](const std::string& kv) -> std::string {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) return "expected key=value, got '" + kv + "'";
        if (!is_config_key(kv.substr(0, eq))) return "unknown config key '" + kv.substr(0, eq) + "'";
        return {};
      });
}

}  // namespace

RunSpec parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Cluster formation simulator: LEACH, LEACH-C and RCFT on a sensor field", "rcftsim"};
  app.require_subcommand(1);
  app.footer("Config keys (defaults):\n" + config_reference() +
             "\n--seeds N runs seeds B..B+N-1 with base B = " + std::to_string(kSeedBase) +
             ".\nExit codes: 0 success, 2 usage or config error, 1 runtime failure.");

  std::string config, protocol, in_dir, out_dir;
  std::vector<std::string> sets, protocols;
  std::size_t rounds = 0, seed_count = 0, threads = default_threads();
  std::uint64_t seed = 0;

  auto* simulate = app.add_subcommand("simulate", "run one protocol and write its CSVs");
  simulate->add_option("--protocol", protocol, "leach | leach-c | rcft")
      ->required()
      ->check(CLI::IsMember(kProtocolNames));
  simulate->add_option("--rounds", rounds, "rounds to simulate")->check(CLI::PositiveNumber);
  auto* sim_seed = simulate->add_option("--seed", seed, "single seed");
  simulate->add_option("--seeds", seed_count, "run N derived seeds")
      ->check(CLI::PositiveNumber)
      ->excludes(sim_seed);
  add_config_flags(simulate, config, sets);
  simulate->add_option("--out", out_dir, "output directory (default: out)");

  auto* compare = app.add_subcommand("compare", "run several protocols over several seeds");
  compare->add_option("--protocols", protocols, "comma-separated protocol list (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kProtocolNames));
  compare->add_option("--rounds", rounds, "rounds to simulate")->check(CLI::PositiveNumber);
  auto* cmp_seed = compare->add_option("--seed", seed, "single seed");
  compare->add_option("--seeds", seed_count, "run N derived seeds (default: 10)")
      ->check(CLI::PositiveNumber)
      ->excludes(cmp_seed);
  add_config_flags(compare, config, sets);
  compare->add_option("--out", out_dir, "output directory (default: out)");
  compare->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* suite = app.add_subcommand("paper-suite", "reproduce the comparison figures on the 100-node preset");
  suite->add_option("--seeds", seed_count, "run N derived seeds (default: 10)")->check(CLI::PositiveNumber);
  suite->add_option("--out", out_dir, "output directory (default: paper-suite)");
  suite->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* plot = app.add_subcommand("plot", "draw charts from rounds.csv and clusters.csv");
  plot->add_option("--in", in_dir, "directory holding the CSVs")->required()->check(CLI::ExistingDirectory);
  plot->add_option("--out", out_dir, "chart directory (default: --in)");
  std::size_t cluster_rounds = 20;
  plot->add_option("--cluster-rounds", cluster_rounds, "rounds used for cluster statistics (default: 20)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    throw HelpRequested(out.str());
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    throw HelpRequested(out.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunSpec spec;
  spec.threads = threads;
  if (!config.empty()) spec.config_path = config;
  spec.overrides = sets;
  if (rounds > 0) spec.overrides.push_back("rounds=" + std::to_string(rounds));

  auto seeds_from_flags = [&](CLI::App* cmd, std::size_t fallback_count) {
    if (cmd->count("--seed") > 0) return std::vector<std::uint64_t>{seed};
    if (seed_count > 0) return derive_seeds(seed_count);
    return derive_seeds(fallback_count);
  };

  if (simulate->parsed()) {
    spec.command = Command::Simulate;
    spec.protocols = {*parse_protocol(protocol)};
    // No seed flag: the config's seed decides.
    if (simulate->count("--seed") > 0 || seed_count > 0) spec.seeds = seeds_from_flags(simulate, 0);
  } else if (compare->parsed()) {
    spec.command = Command::Compare;
    if (protocols.empty()) protocols = kProtocolNames;
    for (const auto& name : protocols) {
      const Protocol p = *parse_protocol(name);
      if (std::find(spec.protocols.begin(), spec.protocols.end(), p) == spec.protocols.end())
        spec.protocols.push_back(p);
    }
    spec.seeds = seeds_from_flags(compare, 10);
  } else if (suite->parsed()) {
    spec.command = Command::PaperSuite;
    spec.protocols = {Protocol::Leach, Protocol::LeachC, Protocol::Rcft};
    spec.seeds = derive_seeds(seed_count > 0 ? seed_count : 10);
    spec.out_dir = "paper-suite";
  } else {
    spec.command = Command::Plot;
    spec.in_dir = in_dir;
    spec.out_dir = in_dir;
    spec.cluster_rounds = cluster_rounds;
  }
  if (!out_dir.empty()) spec.out_dir = out_dir;
  return spec;
}

RunSpec parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_args(args);
}

}  // namespace rcft::cli
