#pragma once

#include <cstdint>

#include "rcft/types.hpp"

namespace rcft {

// First-order radio model, free-space (d^2) amplifier term only.
// All functions throw DomainError on negative inputs.

/// e_elec*bits + eps_amp*bits*distance^2
double tx_energy(const RadioModel& model, std::int64_t bits, double distance);

/// e_elec*bits
double rx_energy(const RadioModel& model, std::int64_t bits);

/// e_da*bits*signals
double aggregate_energy(const RadioModel& model, std::int64_t bits, std::int64_t signals);

}  // namespace rcft
