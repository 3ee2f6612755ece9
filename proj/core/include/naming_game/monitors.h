#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "naming_game/game_engine.h"

namespace naming_game {

// One sample of the population-level time series.
struct SeriesPoint {
  std::uint64_t interaction{0};
  double success_window_avg{0.0};
  double mean_ontology_size{0.0};
  double mean_inventory_size{0.0};
  std::uint64_t distinct_forms_population{0};
  double mean_forms_per_meaning{0.0};
  double mean_meanings_per_form{0.0};
};

struct SnapshotForm {
  std::string form;
  double score{0.0};
};

struct SnapshotEntry {
  CategoryId category;
  ColourValue prototype;
  std::vector<SnapshotForm> forms;  // best score first
};

struct LexiconSnapshot {
  std::uint64_t interaction{0};
  AgentId agent;
  std::vector<SnapshotEntry> entries;
};

// Fraction of successes among the min(window, at) games ending at `at`.
// `records` holds games 1..N in order; `at` is clamped to N. Zero when no
// game has been played.
double windowed_success(std::span<const InteractionRecord> records,
                        std::size_t window, std::uint64_t at);

// Ratio fields average per agent, over agents holding any construction, and
// are 0 when no agent holds one.
SeriesPoint compute_series_point(const Population& population,
                                 std::span<const InteractionRecord> records,
                                 std::uint64_t at, std::size_t window);

LexiconSnapshot take_snapshot(const Agent& agent, std::uint64_t at);

// Samples the series every `sample_interval` games (and on the final game)
// and takes lexicon snapshots at the configured interaction numbers.
class RunMonitor {
 public:
  explicit RunMonitor(const ExperimentParams& params);

  void on_interaction(const Population& population,
                      std::span<const InteractionRecord> records);

  const std::vector<SeriesPoint>& series() const { return series_; }
  const std::vector<LexiconSnapshot>& snapshots() const { return snapshots_; }

 private:
  std::size_t window_;
  std::uint64_t sample_interval_;
  std::uint64_t last_interaction_;
  std::vector<std::uint64_t> snapshot_points_;
  std::optional<std::size_t> snapshot_agent_;
  std::vector<SeriesPoint> series_;
  std::vector<LexiconSnapshot> snapshots_;
};

inline constexpr std::string_view kSeriesCsvHeader =
    "interaction,success_window_avg,mean_ontology_size,mean_inventory_size,"
    "distinct_forms_population,mean_forms_per_meaning,mean_meanings_per_form";

// Reals are written with six decimals, LF line endings.
void write_series_csv(std::ostream& out, std::span<const SeriesPoint> series);
// Throws ConfigError on a wrong header or malformed row.
std::vector<SeriesPoint> read_series_csv(std::istream& in);

std::string snapshots_to_json(std::span<const LexiconSnapshot> snapshots);
std::vector<LexiconSnapshot> snapshots_from_json(std::string_view text);
// Static page: one swatch per category, labelled with its forms and scores.
std::string snapshots_to_html(std::span<const LexiconSnapshot> snapshots);

// [{category_id, prototype: [r, g, b]}, ...]
std::string ontology_to_json(const Ontology& ontology);
Ontology ontology_from_json(std::string_view text);
// [{form, category_id, score}, ...]
std::string inventory_to_json(const ConstructionInventory& inventory);

// Writes series.csv, snapshots.json and snapshots.html into out_dir, creating
// it if needed. Throws IoError naming the path on failure.
void export_run(std::span<const SeriesPoint> series,
                std::span<const LexiconSnapshot> snapshots,
                const std::filesystem::path& out_dir);

struct FieldStats {
  double mean{0.0};
  double std{0.0};  // sample standard deviation; 0 for a single run
};

struct AggregatePoint {
  std::uint64_t interaction{0};
  FieldStats success_window_avg;
  FieldStats mean_ontology_size;
  FieldStats mean_inventory_size;
  FieldStats distinct_forms_population;
  FieldStats mean_forms_per_meaning;
  FieldStats mean_meanings_per_form;
};

// Per-interaction mean and sample std across runs. Throws ConfigError when
// runs differ in length or sampling.
std::vector<AggregatePoint> aggregate_runs(
    std::span<const std::vector<SeriesPoint>> runs);

void write_aggregate_csv(std::ostream& out,
                         std::span<const AggregatePoint> aggregate);

}  // namespace naming_game
