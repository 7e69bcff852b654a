#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace rcft {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct SensorNode {
  NodeId id = 0;
  Point pos;
  double energy = 0.0;  // joules
  bool alive = true;

  friend bool operator==(const SensorNode&, const SensorNode&) = default;
};

/// First-order radio model constants.
struct RadioModel {
  double e_elec = 50e-9;    // J/bit, TX and RX electronics
  double eps_amp = 100e-12; // J/bit/m^2
  double e_da = 5e-9;       // J/bit/signal, aggregation at the head

  void validate() const;

  friend bool operator==(const RadioModel&, const RadioModel&) = default;
};

/// Field geometry and experiment parameters. Defaults are the 100-node preset.
struct NetworkConfig {
  double field_width = 100.0;
  double field_height = 100.0;
  std::size_t node_count = 100;
  std::size_t head_count = 5;
  Point bs_pos{50.0, 500.0};
  std::int64_t data_packet_bits = 2000;
  std::int64_t control_packet_bits = 200;
  double radio_range = 25.0;
  double initial_energy = 2.0;
  std::size_t rounds = 20;
  std::uint64_t seed = 1;
  RadioModel radio;

  double head_fraction() const {
    return node_count == 0 ? 0.0 : static_cast<double>(head_count) / static_cast<double>(node_count);
  }

  /// Throws ConfigError naming the first violated field.
  void validate() const;

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

enum class Protocol { Leach, LeachC, Rcft };

std::string_view to_string(Protocol protocol);
std::optional<Protocol> parse_protocol(std::string_view name);

}  // namespace rcft
