#include "rcft/radio.hpp"

#include <cmath>
#include <string>

#include "rcft/errors.hpp"

namespace rcft {
namespace {

void check_finite_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ConfigError(name, "must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

void RadioModel::validate() const {
  check_finite_positive(e_elec, "e_elec");
  check_finite_positive(eps_amp, "eps_amp");
  check_finite_positive(e_da, "e_da");
}

double tx_energy(const RadioModel& model, std::int64_t bits, double distance) {
  if (bits < 0) throw DomainError("tx_energy: negative bit count");
  if (!(distance >= 0.0)) throw DomainError("tx_energy: negative or NaN distance");
  const double k = static_cast<double>(bits);
  return model.e_elec * k + model.eps_amp * k * distance * distance;
}

double rx_energy(const RadioModel& model, std::int64_t bits) {
  if (bits < 0) throw DomainError("rx_energy: negative bit count");
  return model.e_elec * static_cast<double>(bits);
}

double aggregate_energy(const RadioModel& model, std::int64_t bits, std::int64_t signals) {
  if (bits < 0 || signals < 0) throw DomainError("aggregate_energy: negative input");
  return model.e_da * static_cast<double>(bits) * static_cast<double>(signals);
}

}  // namespace rcft
