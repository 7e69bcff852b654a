#include "rcft/field.hpp"

#include <cmath>
#include <string>

#include "rcft/errors.hpp"

namespace rcft {

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::Leach: return "leach";
    case Protocol::LeachC: return "leach-c";
    case Protocol::Rcft: return "rcft";
  }
  return "unknown";
}

std::optional<Protocol> parse_protocol(std::string_view name) {
  if (name == "leach") return Protocol::Leach;
  if (name == "leach-c" || name == "leach_c" || name == "leachc") return Protocol::LeachC;
  if (name == "rcft") return Protocol::Rcft;
  return std::nullopt;
}

void NetworkConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) throw ConfigError(name, "must be positive and finite");
  };
  positive(field_width, "field_width");
  positive(field_height, "field_height");
  if (head_count < 1) throw ConfigError("head_count", "must be at least 1");
  if (head_count > node_count) {
    throw ConfigError("head_count", "must not exceed node_count (" + std::to_string(node_count) + ")");
  }
  if (!std::isfinite(bs_pos.x) || !std::isfinite(bs_pos.y)) {
    throw ConfigError("bs_pos", "must be finite");
  }
  if (data_packet_bits <= 0) throw ConfigError("data_packet_bits", "must be positive");
  if (control_packet_bits < 0) throw ConfigError("control_packet_bits", "must be non-negative");
  positive(radio_range, "radio_range");
  positive(initial_energy, "initial_energy");
  radio.validate();
}

std::vector<SensorNode> generate_field(const NetworkConfig& config, RngStream& rng) {
  if (config.node_count == 0) return {};
  config.validate();
  std::vector<SensorNode> nodes;
  nodes.reserve(config.node_count);
  for (std::size_t i = 0; i < config.node_count; ++i) {
    const double x = rng.uniform(0.0, config.field_width);
    const double y = rng.uniform(0.0, config.field_height);
    nodes.push_back({static_cast<NodeId>(i), {x, y}, config.initial_energy, true});
  }
  return nodes;
}

}  // namespace rcft
