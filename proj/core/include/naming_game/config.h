#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "naming_game/game_engine.h"

namespace naming_game {

inline constexpr std::string_view kOutDirEnvVar = "NAMING_GAME_OUT_DIR";

struct ExperimentConfig {
  ExperimentParams params;
  std::uint32_t runs{1};
  std::uint64_t seed{42};
  std::filesystem::path out_dir{"naming-game-out"};
  std::size_t parallel{1};
};

// Config key (as in the JSON schema) -> raw command-line text.
using FlagOverrides = std::map<std::string, std::string>;

// Pretty-printed JSON with every key; feeding it back reproduces the config.
std::string config_to_json(const ExperimentConfig& config);

// Missing keys keep their defaults. Unknown keys, wrong types and range
// violations throw ConfigError.
ExperimentConfig config_from_json(std::string_view text);

// Resolves built-in defaults < env out_dir < config file < flags, then
// validates the result (including palette separation).
ExperimentConfig parse_config(
    const std::optional<std::filesystem::path>& file,
    const FlagOverrides& flags = {},
    const std::optional<std::string>& env_out_dir = std::nullopt);

// Throws ConfigError on any invalid field.
void validate(const ExperimentConfig& config);

}  // namespace naming_game
