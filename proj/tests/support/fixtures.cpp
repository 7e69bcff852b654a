#include "support/fixtures.hpp"

#include <random>

namespace rcft::testing {

std::vector<SensorNode> nodes_at(const std::vector<Point>& points, double energy) {
  std::vector<SensorNode> nodes;
  for (std::size_t i = 0; i < points.size(); ++i)
    nodes.push_back({static_cast<NodeId>(i), points[i], energy, true});
  return nodes;
}

std::vector<SensorNode> line_nodes(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({10.0 * static_cast<double>(i), 0.0});
  return nodes_at(pts);
}

std::vector<SensorNode> grid_nodes(std::size_t side) {
  std::vector<Point> pts;
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c)
      pts.push_back({10.0 * static_cast<double>(c), 10.0 * static_cast<double>(r)});
  return nodes_at(pts);
}

// std::mt19937_64 raw output is fully specified by the standard; only the
// distributions are not, so the scaling is done by hand.
std::vector<SensorNode> random_nodes(std::size_t n, double w, double h, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = unit() * w;
    pts.push_back({x, unit() * h});
  }
  return nodes_at(pts);
}

NetworkConfig preset(std::size_t rounds, std::uint64_t seed) {
  NetworkConfig c;
  c.rounds = rounds;
  c.seed = seed;
  return c;
}

}  // namespace rcft::testing
