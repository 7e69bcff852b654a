#include <gtest/gtest.h>

#include <set>

#include "rcft/errors.hpp"
#include "rcft/field.hpp"
#include "rcft/rng.hpp"
#include "support/fixtures.hpp"

namespace {

using rcft::RngStream;

TEST(Rng, SameSeedAndLabelReplay) {
  RngStream a(42, "placement"), b(42, "placement");
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, LabelsAndSeedsSeparateStreams) {
  RngStream a(42, "placement"), b(42, "election"), c(43, "placement");
  const auto x = a.next_u64();
  EXPECT_NE(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
}

TEST(Rng, SplitDoesNotAdvanceParent) {
  RngStream a(9, "root"), b(9, "root");
  auto child = a.split("child");
  EXPECT_EQ(child.label(), "root/child");
  EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, RangesHold) {
  RngStream r(5, "ranges");
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = r.uniform(-3.0, 4.0);
    ASSERT_GE(v, -3.0);
    ASSERT_LT(v, 4.0);
    ASSERT_LT(r.uniform_index(7), 7u);
  }
}

TEST(Rng, UniformIndexHitsEveryValue) {
  RngStream r(11, "index");
  std::vector<int> seen(13, 0);
  for (int i = 0; i < 13000; ++i) ++seen[r.uniform_index(13)];
  for (int s : seen) EXPECT_GT(s, 800);
}

TEST(Rng, SampleWithoutReplacementIsDistinct) {
  RngStream r(3, "sample");
  std::vector<int> pool(50);
  for (int i = 0; i < 50; ++i) pool[i] = i;
  for (int trial = 0; trial < 100; ++trial) {
    auto s = r.sample_without_replacement(pool, 5);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(std::set<int>(s.begin(), s.end()).size(), 5u);
  }
  EXPECT_EQ(r.sample_without_replacement(pool, 80).size(), 50u);
}

TEST(Field, EmptyNetwork) {
  rcft::NetworkConfig c;
  c.node_count = 0;
  RngStream r(1, "placement");
  EXPECT_TRUE(rcft::generate_field(c, r).empty());
}

TEST(Field, PresetSeedSeven) {
  const auto c = rcft::testing::preset(20, 7);
  RngStream r(7, "placement");
  const auto nodes = rcft::generate_field(c, r);
  ASSERT_EQ(nodes.size(), 100u);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    EXPECT_EQ(nodes[i].id, i);
    EXPECT_GE(nodes[i].pos.x, 0.0);
    EXPECT_LE(nodes[i].pos.x, 100.0);
    EXPECT_GE(nodes[i].pos.y, 0.0);
    EXPECT_LE(nodes[i].pos.y, 100.0);
    EXPECT_EQ(nodes[i].energy, 2.0);
    EXPECT_TRUE(nodes[i].alive);
  }
}

TEST(Field, Replay) {
  const auto c = rcft::testing::preset(20, 7);
  RngStream a(7, "placement"), b(7, "placement");
  EXPECT_EQ(rcft::generate_field(c, a), rcft::generate_field(c, b));
}

TEST(Config, DefaultsArePreset) {
  const rcft::NetworkConfig c;
  EXPECT_EQ(c.field_width, 100.0);
  EXPECT_EQ(c.field_height, 100.0);
  EXPECT_EQ(c.node_count, 100u);
  EXPECT_EQ(c.head_count, 5u);
  EXPECT_EQ(c.bs_pos, (rcft::Point{50.0, 500.0}));
  EXPECT_EQ(c.data_packet_bits, 2000);
  EXPECT_EQ(c.rounds, 20u);
  EXPECT_DOUBLE_EQ(c.head_fraction(), 0.05);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, InvariantsNameTheField) {
  auto field_of = [](rcft::NetworkConfig c) {
    try {
      c.validate();
    } catch (const rcft::ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  rcft::NetworkConfig c;
  c.head_count = 0;
  EXPECT_EQ(field_of(c), "head_count");
  c = {};
  c.head_count = 101;
  EXPECT_EQ(field_of(c), "head_count");
  c = {};
  c.radio_range = 0.0;
  EXPECT_EQ(field_of(c), "radio_range");
  c = {};
  c.data_packet_bits = 0;
  EXPECT_EQ(field_of(c), "data_packet_bits");
}

TEST(Config, ProtocolNames) {
  for (auto p : {rcft::Protocol::Leach, rcft::Protocol::LeachC, rcft::Protocol::Rcft})
    EXPECT_EQ(rcft::parse_protocol(rcft::to_string(p)), p);
  EXPECT_FALSE(rcft::parse_protocol("teen").has_value());
}

}  // namespace
