#pragma once

#include <cstdint>
#include <vector>

#include "rcft/engine.hpp"
#include "rcft/types.hpp"

namespace rcft::testing {

/// Nodes at the given points, ids in order, full energy.
std::vector<SensorNode> nodes_at(const std::vector<Point>& points, double energy = 2.0);

/// n nodes on a horizontal line, 10 m apart. With kLineRange every node
/// touches exactly its two neighbours.
std::vector<SensorNode> line_nodes(std::size_t n);
inline constexpr double kLineRange = 15.0;

/// side x side grid, 10 m pitch, row-major ids. kGridRange links the four
/// axis neighbours only.
std::vector<SensorNode> grid_nodes(std::size_t side);
inline constexpr double kGridRange = 10.5;

/// Uniform random nodes in a w x h box, drawn from an independent generator.
std::vector<SensorNode> random_nodes(std::size_t n, double w, double h, std::uint64_t seed);

NetworkConfig preset(std::size_t rounds, std::uint64_t seed);

}  // namespace rcft::testing
