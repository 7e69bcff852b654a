#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace rcft {

/// How far an RCFT head moves for a given tl value.
enum class MoveRule {
  Half,  // ceil(|tl| / 2) hops: settles where tl is 0 or +-1
  Full,  // |tl| hops, the literal reading; flips the sign of tl
};

std::string_view to_string(MoveRule rule);
std::optional<MoveRule> parse_move_rule(std::string_view name);

struct ProtocolParams {
  double p = 0.05;  // head fraction
  std::size_t leach_c_iterations = 50;
  MoveRule rcft_move_rule = MoveRule::Half;
  std::size_t rcft_max_passes = 3;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

}  // namespace rcft
