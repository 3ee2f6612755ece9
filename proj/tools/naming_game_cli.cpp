// naming-game: run colour naming game experiments from the command line.
//
//   naming-game print-default-config > exp.json
//   naming-game run --config exp.json --runs 10 --seed 42 --out-dir out

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "naming_game/batch.h"
#include "naming_game/config.h"
#include "naming_game/errors.h"

namespace {

// flag name -> config key
const std::vector<std::pair<std::string, std::string>> kValueFlags = {
    {"--population-size", "population_size"},
    {"--objects-per-scene", "objects_per_scene"},
    {"--num-interactions", "num_interactions"},
    {"--runs", "runs"},
    {"--seed", "seed"},
    {"--noise-std", "noise_std"},
    {"--initial-score", "initial_score"},
    {"--inc", "inc"},
    {"--inh", "inh"},
    {"--dec", "dec"},
    {"--shift-rate", "shift_rate"},
    {"--window", "window"},
    {"--snapshot-at", "snapshot_points"},
    {"--snapshot-agent", "snapshot_agent"},
    {"--out-dir", "out_dir"},
    {"--parallel", "parallel"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grounded colour naming game simulator"};
  app.require_subcommand(1);

  auto* print_cmd = app.add_subcommand(
      "print-default-config", "Print the built-in configuration as JSON");

  auto* run_cmd = app.add_subcommand("run", "Run one or more experiments");
  std::string config_file;
  run_cmd->add_option("--config", config_file, "JSON configuration file")
      ->check(CLI::ExistingFile);
  std::vector<std::string> values(kValueFlags.size());
  for (std::size_t i = 0; i < kValueFlags.size(); ++i) {
    run_cmd->add_option(kValueFlags[i].first, values[i]);
  }

  CLI11_PARSE(app, argc, argv);

  if (*print_cmd) {
    std::cout << naming_game::config_to_json(naming_game::ExperimentConfig{});
    return 0;
  }

  naming_game::FlagOverrides flags;
  for (std::size_t i = 0; i < kValueFlags.size(); ++i) {
    if (run_cmd->count(kValueFlags[i].first) > 0) {
      flags[kValueFlags[i].second] = values[i];
    }
  }
  std::optional<std::string> env_out_dir;
  if (const char* env = std::getenv(naming_game::kOutDirEnvVar.data())) {
    env_out_dir = env;
  }

  naming_game::ExperimentConfig config;
  try {
    std::optional<std::filesystem::path> file;
    if (!config_file.empty()) file = config_file;
    config = naming_game::parse_config(file, flags, env_out_dir);
  } catch (const naming_game::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }
  return naming_game::run_command(config, std::cout, std::cerr);
}
