#include "naming_game/experiment_runner.h"

namespace naming_game {

RunResult run_experiment(const ExperimentParams& params, std::uint64_t seed,
                         const InteractionObserver& observer) {
  Experiment experiment(params, seed);
  RunMonitor monitor(params);
  RunResult result;
  result.records.reserve(params.num_interactions);
  for (std::uint64_t n = 0; n < params.num_interactions; ++n) {
    result.records.push_back(experiment.run_interaction());
    monitor.on_interaction(experiment.population(), result.records);
    if (observer) observer(experiment.population(), result.records);
  }
  result.population = std::move(experiment.population());
  result.series = monitor.series();
  result.snapshots = monitor.snapshots();
  return result;
}

}  // namespace naming_game
