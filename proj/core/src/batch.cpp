#include "naming_game/batch.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "naming_game/errors.h"
#include "naming_game/experiment_runner.h"

namespace naming_game {
namespace {

void write_text(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << data;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

std::string population_json(const Population& population) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < population.agents.size(); ++i) {
    const auto& agent = population.agents[i];
    out += "{\"agent_id\":" + std::to_string(agent.id.value) +
           ",\"ontology\":" + ontology_to_json(agent.ontology) +
           ",\"inventory\":" + inventory_to_json(agent.inventory) + "}";
    out += i + 1 < population.agents.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::vector<SeriesPoint> run_one(const ExperimentConfig& config,
                                 std::size_t index) {
  const std::uint64_t seed = config.seed + index;
  RunResult result = run_experiment(config.params, seed);
  const auto dir = config.out_dir / ("run-" + std::to_string(index));
  export_run(result.series, result.snapshots, dir);
  write_text(dir / "population.json", population_json(result.population));
  return std::move(result.series);
}

}  // namespace

BatchResult run_batch(const ExperimentConfig& config) {
  validate(config);
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw IoError(config.out_dir.string(), ec.message());
  write_text(config.out_dir / "config.json", config_to_json(config));

  const std::size_t runs = config.runs;
  std::vector<std::vector<SeriesPoint>> series(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs; i = next++) {
      try {
        series[i] = run_one(config, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(config.parallel, runs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BatchResult batch;
  for (std::size_t i = 0; i < runs; ++i) {
    RunSummary summary{i, config.seed + i, {}};
    if (!series[i].empty()) summary.final_point = series[i].back();
    batch.summaries.push_back(summary);
  }
  batch.aggregate = aggregate_runs(series);
  std::ostringstream csv;
  write_aggregate_csv(csv, batch.aggregate);
  write_text(config.out_dir / "aggregate.csv", csv.str());
  return batch;
}

int run_command(const ExperimentConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    const auto batch = run_batch(config);
    for (const auto& s : batch.summaries) {
      char line[160];
      std::snprintf(line, sizeof line,
                    "run %zu seed %llu: success %.3f ontology %.2f forms %llu",
                    s.index, static_cast<unsigned long long>(s.seed),
                    s.final_point.success_window_avg,
                    s.final_point.mean_ontology_size,
                    static_cast<unsigned long long>(
                        s.final_point.distinct_forms_population));
      out << line << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace naming_game
