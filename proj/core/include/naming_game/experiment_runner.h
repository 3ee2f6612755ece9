#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "naming_game/game_engine.h"
#include "naming_game/monitors.h"

namespace naming_game {

struct RunResult {
  std::vector<InteractionRecord> records;
  Population population;
  std::vector<SeriesPoint> series;
  std::vector<LexiconSnapshot> snapshots;
};

// Called after every game with the live population and all records so far.
using InteractionObserver =
    std::function<void(const Population&, std::span<const InteractionRecord>)>;

// Builds the world and population from `params`, plays
// params.num_interactions games and collects the monitored series and
// snapshots. Configuration errors are thrown before the first game.
RunResult run_experiment(const ExperimentParams& params, std::uint64_t seed,
                         const InteractionObserver& observer = {});

}  // namespace naming_game
