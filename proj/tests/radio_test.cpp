#include <gtest/gtest.h>

#include <cmath>

#include "rcft/errors.hpp"
#include "rcft/radio.hpp"

namespace {

using rcft::RadioModel;

TEST(Radio, ZeroBitsCostNothing) {
  const RadioModel m;
  EXPECT_EQ(rcft::tx_energy(m, 0, 37.5), 0.0);
  EXPECT_EQ(rcft::rx_energy(m, 0), 0.0);
  EXPECT_EQ(rcft::aggregate_energy(m, 2000, 0), 0.0);
}

TEST(Radio, ZeroDistanceIsElectronicsOnly) {
  const RadioModel m;
  EXPECT_EQ(rcft::tx_energy(m, 2000, 0.0), 50e-9 * 2000);
}

TEST(Radio, HandEvaluatedValues) {
  const RadioModel m;
  // 2000*50e-9 + 2000*100e-12*400
  EXPECT_NEAR(rcft::tx_energy(m, 2000, 20.0), 1.8e-4, 1e-15);
  EXPECT_NEAR(rcft::rx_energy(m, 2000), 1.0e-4, 1e-15);
  EXPECT_NEAR(rcft::aggregate_energy(m, 2000, 1), 1.0e-5, 1e-16);
}

TEST(Radio, ReceiveEqualsTransmitAtZeroDistance) {
  const RadioModel m;
  for (std::int64_t k : {0, 1, 7, 200, 2000, 123456}) EXPECT_EQ(rcft::rx_energy(m, k), rcft::tx_energy(m, k, 0.0));
}

TEST(Radio, AggregationIsLinearInSignals) {
  const RadioModel m;
  for (std::int64_t a = 0; a < 6; ++a)
    for (std::int64_t b = 0; b < 6; ++b)
      EXPECT_NEAR(rcft::aggregate_energy(m, 2000, a + b),
                  rcft::aggregate_energy(m, 2000, a) + rcft::aggregate_energy(m, 2000, b), 1e-18);
}

TEST(Radio, AmplifierTermIsTheDifference) {
  const RadioModel m;
  for (double d : {0.0, 1.0, 25.0, 503.0})
    for (std::int64_t k : {200, 2000}) {
      const double diff = rcft::tx_energy(m, k, d) - rcft::rx_energy(m, k);
      const double amp = m.eps_amp * static_cast<double>(k) * d * d;
      EXPECT_NEAR(diff, amp, 1e-12 * std::max(1.0, amp));
    }
}

TEST(Radio, MonotoneInBitsAndDistance) {
  const RadioModel m;
  double prev = -1.0;
  for (double d = 0.0; d <= 600.0; d += 7.5) {
    const double e = rcft::tx_energy(m, 2000, d);
    EXPECT_GE(e, prev);
    prev = e;
  }
  prev = -1.0;
  for (std::int64_t k = 0; k <= 4000; k += 250) {
    EXPECT_GE(rcft::tx_energy(m, k, 30.0), prev);
    EXPECT_GE(rcft::rx_energy(m, k), k == 0 ? 0.0 : rcft::rx_energy(m, k - 250));
    prev = rcft::tx_energy(m, k, 30.0);
  }
}

TEST(Radio, NegativeInputsAreRejected) {
  const RadioModel m;
  EXPECT_THROW(rcft::tx_energy(m, -1, 1.0), rcft::DomainError);
  EXPECT_THROW(rcft::tx_energy(m, 1, -1.0), rcft::DomainError);
  EXPECT_THROW(rcft::rx_energy(m, -5), rcft::DomainError);
  EXPECT_THROW(rcft::aggregate_energy(m, 10, -1), rcft::DomainError);
}

TEST(Radio, ModelValidation) {
  RadioModel m;
  EXPECT_NO_THROW(m.validate());
  m.eps_amp = 0.0;
  try {
    m.validate();
    FAIL() << "expected ConfigError";
  } catch (const rcft::ConfigError& e) {
    EXPECT_EQ(e.field(), "eps_amp");
  }
}

}  // namespace
