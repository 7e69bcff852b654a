#include "rcft/cli/config_file.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rcft/errors.hpp"

namespace rcft::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::string sig(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Entry {
  std::string_view key;
  std::string_view help;
  // Returns an error message, empty on success.
  std::function<std::string(LoadedConfig&, std::string_view)> set;
  std::function<std::string(LoadedConfig)> get;
};

Entry real(std::string_view key, std::string_view help, std::function<double&(LoadedConfig&)> ref) {
  return {key, help,
          [ref](LoadedConfig& c, std::string_view v) -> std::string {
            double d = 0.0;
            if (!parse_number(v, d)) return "expected a number, got '" + std::string(v) + "'";
            ref(c) = d;
            return {};
          },
          [ref](LoadedConfig c) { return sig(ref(c)); }};
}

template <typename T>
Entry integer(std::string_view key, std::string_view help, std::function<T&(LoadedConfig&)> ref) {
  return {key, help,
          [ref](LoadedConfig& c, std::string_view v) -> std::string {
            T n{};
            if (!parse_number(v, n)) return "expected a non-negative integer, got '" + std::string(v) + "'";
            ref(c) = n;
            return {};
          },
          [ref](LoadedConfig c) { return std::to_string(ref(c)); }};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    using C = LoadedConfig;
    std::vector<Entry> t;
    t.push_back(real("field_width", "field width (m)", [](C& c) -> double& { return c.config.field_width; }));
    t.push_back(real("field_height", "field height (m)", [](C& c) -> double& { return c.config.field_height; }));
    t.push_back(integer<std::size_t>("node_count", "sensor nodes", [](C& c) -> std::size_t& { return c.config.node_count; }));
    t.push_back(integer<std::size_t>("head_count", "cluster heads per round", [](C& c) -> std::size_t& { return c.config.head_count; }));
    t.push_back(real("head_fraction", "head fraction p (default head_count / node_count)",
                     [](C& c) -> double& { return c.params.p; }));
    t.push_back(real("bs_x", "base station x (m)", [](C& c) -> double& { return c.config.bs_pos.x; }));
    t.push_back(real("bs_y", "base station y (m)", [](C& c) -> double& { return c.config.bs_pos.y; }));
    t.push_back(integer<std::int64_t>("data_packet_bits", "data packet size (bits)",
                                      [](C& c) -> std::int64_t& { return c.config.data_packet_bits; }));
    t.push_back(integer<std::int64_t>("control_packet_bits", "control packet size (bits)",
                                      [](C& c) -> std::int64_t& { return c.config.control_packet_bits; }));
    t.push_back(real("radio_range", "unit-disk radio range (m)", [](C& c) -> double& { return c.config.radio_range; }));
    t.push_back(real("initial_energy", "initial energy per node (J)",
                     [](C& c) -> double& { return c.config.initial_energy; }));
    t.push_back(integer<std::size_t>("rounds", "rounds per run", [](C& c) -> std::size_t& { return c.config.rounds; }));
    t.push_back(integer<std::uint64_t>("seed", "run seed", [](C& c) -> std::uint64_t& { return c.config.seed; }));
    t.push_back(real("e_elec", "electronics energy (J/bit)", [](C& c) -> double& { return c.config.radio.e_elec; }));
    t.push_back(real("eps_amp", "amplifier energy (J/bit/m^2)", [](C& c) -> double& { return c.config.radio.eps_amp; }));
    t.push_back(real("e_da", "aggregation energy (J/bit/signal)", [](C& c) -> double& { return c.config.radio.e_da; }));
    t.push_back(integer<std::size_t>("leach_c_iterations", "LEACH-C local search sweeps",
                                     [](C& c) -> std::size_t& { return c.params.leach_c_iterations; }));
    t.push_back({"rcft_move_rule", "RCFT move rule (half | full)",
                 [](C& c, std::string_view v) -> std::string {
                   auto rule = parse_move_rule(v);
                   if (!rule) return "expected half or full, got '" + std::string(v) + "'";
                   c.params.rcft_move_rule = *rule;
                   return {};
                 },
                 [](C c) { return std::string(to_string(c.params.rcft_move_rule)); }});
    t.push_back(integer<std::size_t>("rcft_max_passes", "RCFT re-centering passes",
                                     [](C& c) -> std::size_t& { return c.params.rcft_max_passes; }));
    return t;
  }();
  return table;
}

const Entry* find_entry(std::string_view key) {
  for (const auto& e : entries())
    if (e.key == key) return &e;
  return nullptr;
}

// Maps a validation field name onto the config key that sets it.
std::string_view key_for_field(std::string_view field) {
  if (field == "bs_pos") return "bs_x";
  if (field == "p") return "head_fraction";
  return field;
}

}  // namespace

std::span<const std::string_view> config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    for (const auto& e : entries()) k.push_back(e.key);
    return k;
  }();
  return keys;
}

bool is_config_key(std::string_view key) { return find_entry(key) != nullptr; }

std::string config_reference() {
  LoadedConfig defaults;
  std::string out;
  for (const auto& e : entries()) {
    std::string line = std::string(e.key) + "=" + e.get(defaults);
    line.resize(std::max<std::size_t>(line.size() + 1, 28), ' ');
    out += line + "# " + std::string(e.help) + "\n";
  }
  return out;
}

LoadedConfig load_config(const std::optional<std::filesystem::path>& path,
                         std::span<const std::string> overrides) {
  LoadedConfig loaded;
  std::map<std::string, std::string, std::less<>> origin;  // key -> where it was last set

  auto apply = [&](const std::string& where, std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigFileError(where, "", "expected key=value");
    const std::string key(trim(text.substr(0, eq)));
    const std::string_view value = trim(text.substr(eq + 1));
    const Entry* entry = find_entry(key);
    if (!entry) throw ConfigFileError(where, key, "unknown key");
    if (value.empty()) throw ConfigFileError(where, key, "missing value");
    if (auto err = entry->set(loaded, value); !err.empty()) throw ConfigFileError(where, key, err);
    origin[key] = where;
  };

  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigFileError(path->string(), "", "cannot open config file");
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      std::string_view body = line;
      if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      body = trim(body);
      if (body.empty()) continue;
      apply(path->string() + ":" + std::to_string(n), body);
    }
  }
  for (const auto& o : overrides) apply("--set " + o, o);

  if (!origin.contains("head_fraction")) {
    loaded.params.p = loaded.config.node_count == 0 ? 0.0 : loaded.config.head_fraction();
  }

  try {
    loaded.config.validate();
    loaded.params.validate();
  } catch (const ConfigError& e) {
    const std::string key(key_for_field(e.field()));
    auto it = origin.find(key);
    const std::string where = it != origin.end() ? it->second : (path ? path->string() : "defaults");
    std::string what = e.what();
    if (what.starts_with(e.field() + ": ")) what.erase(0, e.field().size() + 2);
    throw ConfigFileError(where, key, what);
  }
  return loaded;
}

}  // namespace rcft::cli
