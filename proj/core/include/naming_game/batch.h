#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "naming_game/config.h"
#include "naming_game/monitors.h"

namespace naming_game {

struct RunSummary {
  std::size_t index{0};
  std::uint64_t seed{0};
  SeriesPoint final_point;
};

struct BatchResult {
  std::vector<RunSummary> summaries;
  std::vector<AggregatePoint> aggregate;
};

// Runs config.runs experiments with seeds seed, seed + 1, ... on up to
// config.parallel threads. Writes config.json, run-<i>/ (series.csv,
// snapshots.json, snapshots.html, population.json) and aggregate.csv under
// config.out_dir. Throws IoError / ConfigError.
BatchResult run_batch(const ExperimentConfig& config);

// run_batch plus one summary line per run on `out`. Returns the process exit
// code: 0 when every run finished and every file was written, 1 otherwise
// (with the reason on `err`).
int run_command(const ExperimentConfig& config, std::ostream& out,
                std::ostream& err);

}  // namespace naming_game
