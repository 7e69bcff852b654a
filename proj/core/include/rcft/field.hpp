#pragma once

#include <vector>

#include "rcft/rng.hpp"
#include "rcft/types.hpp"

namespace rcft {

/// Places config.node_count nodes i.i.d. uniform over the field rectangle,
/// each with initial_energy and alive. Ids are 0..n-1 in draw order.
std::vector<SensorNode> generate_field(const NetworkConfig& config, RngStream& rng);

}  // namespace rcft
