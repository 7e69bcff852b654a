#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcft/params.hpp"
#include "rcft/types.hpp"

namespace rcft::cli {

/// Bad config file line or override. Maps to exit code 2.
class ConfigFileError : public std::runtime_error {
 public:
  ConfigFileError(std::string where, std::string key, const std::string& message)
      : std::runtime_error(where + ": " + (key.empty() ? "" : key + ": ") + message),
        where_(std::move(where)),
        key_(std::move(key)) {}

  const std::string& where() const noexcept { return where_; }
  const std::string& key() const noexcept { return key_; }

 private:
  std::string where_;
  std::string key_;
};

struct LoadedConfig {
  NetworkConfig config;
  ProtocolParams params;
};

/// Every key a config file or --set override may name.
std::span<const std::string_view> config_keys();
bool is_config_key(std::string_view key);

/// Key reference with defaults, one line per key, for --help and default.cfg.
std::string config_reference();

/// Reads a key=value file (`#` starts a comment) and applies `overrides`
/// ("key=value", later wins) on top. A missing path means defaults only.
/// head_fraction follows head_count/node_count unless set explicitly.
/// Throws ConfigFileError naming the line (or override) and key.
LoadedConfig load_config(const std::optional<std::filesystem::path>& path,
                         std::span<const std::string> overrides);

}  // namespace rcft::cli
