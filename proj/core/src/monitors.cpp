#include "naming_game/monitors.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "naming_game/errors.h"

namespace naming_game {
namespace {

using nlohmann::json;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fixed6(double v) { return fixed(v, 6); }

template <typename Key, typename Value>
double mean_group_size(const std::map<Key, std::set<Value>>& groups) {
  if (groups.empty()) return 0.0;
  double total = 0.0;
  for (const auto& [key, members] : groups) total += members.size();
  return total / static_cast<double>(groups.size());
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string html_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

int css_channel(double v) {
  return static_cast<int>(std::lround(std::clamp(v, kChannelMin, kChannelMax)));
}

json prototype_json(const ColourValue& c) { return json::array({c.r, c.g, c.b}); }

ColourValue prototype_from(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError("prototype must be an [r, g, b] array");
  }
  return ColourValue::clipped(j[0].get<double>(), j[1].get<double>(),
                              j[2].get<double>());
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << data;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

FieldStats stats(const std::vector<double>& xs) {
  FieldStats s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

}  // namespace

double windowed_success(std::span<const InteractionRecord> records,
                        std::size_t window, std::uint64_t at) {
  if (window < 1) throw ConfigError("window must be >= 1");
  const auto end = std::min<std::uint64_t>(at, records.size());
  if (end == 0) return 0.0;
  const auto count = std::min<std::uint64_t>(window, end);
  std::uint64_t wins = 0;
  for (auto i = end - count; i < end; ++i) {
    if (records[i].success) ++wins;
  }
  return static_cast<double>(wins) / static_cast<double>(count);
}

SeriesPoint compute_series_point(const Population& population,
                                 std::span<const InteractionRecord> records,
                                 std::uint64_t at, std::size_t window) {
  SeriesPoint point;
  point.interaction = at;
  point.success_window_avg = windowed_success(records, window, at);

  std::set<std::string> forms;
  double categories = 0.0;
  double constructions = 0.0;
  double forms_per_meaning = 0.0;
  double meanings_per_form = 0.0;
  std::size_t speaking_agents = 0;
  for (const auto& agent : population.agents) {
    categories += agent.ontology.size();
    constructions += agent.inventory.size();
    if (agent.inventory.empty()) continue;

    std::map<CategoryId, std::set<std::string>> by_meaning;
    std::map<std::string, std::set<CategoryId>> by_form;
    for (const auto& c : agent.inventory.constructions()) {
      by_meaning[c.category].insert(c.form);
      by_form[c.form].insert(c.category);
      forms.insert(c.form);
    }
    forms_per_meaning += mean_group_size(by_meaning);
    meanings_per_form += mean_group_size(by_form);
    ++speaking_agents;
  }

  const auto agents = static_cast<double>(population.agents.size());
  if (agents > 0) {
    point.mean_ontology_size = categories / agents;
    point.mean_inventory_size = constructions / agents;
  }
  point.distinct_forms_population = forms.size();
  if (speaking_agents > 0) {
    point.mean_forms_per_meaning = forms_per_meaning / speaking_agents;
    point.mean_meanings_per_form = meanings_per_form / speaking_agents;
  }
  return point;
}

LexiconSnapshot take_snapshot(const Agent& agent, std::uint64_t at) {
  LexiconSnapshot snapshot;
  snapshot.interaction = at;
  snapshot.agent = agent.id;
  for (const auto& category : agent.ontology.categories()) {
    SnapshotEntry entry{category.id, category.prototype, {}};
    for (const auto& c : agent.inventory.constructions()) {
      if (c.category == category.id) entry.forms.push_back({c.form, c.score});
    }
    std::sort(entry.forms.begin(), entry.forms.end(),
              [](const SnapshotForm& a, const SnapshotForm& b) {
                return a.score != b.score ? a.score > b.score : a.form < b.form;
              });
    snapshot.entries.push_back(std::move(entry));
  }
  return snapshot;
}

RunMonitor::RunMonitor(const ExperimentParams& params)
    : window_(params.window),
      sample_interval_(params.sample_interval),
      last_interaction_(params.num_interactions),
      snapshot_points_(params.snapshot_points),
      snapshot_agent_(params.snapshot_agent) {
  std::sort(snapshot_points_.begin(), snapshot_points_.end());
  snapshot_points_.erase(
      std::unique(snapshot_points_.begin(), snapshot_points_.end()),
      snapshot_points_.end());
}

void RunMonitor::on_interaction(const Population& population,
                                std::span<const InteractionRecord> records) {
  const std::uint64_t at = records.size();
  if (at % sample_interval_ == 0 || at == last_interaction_) {
    series_.push_back(compute_series_point(population, records, at, window_));
  }
  if (std::binary_search(snapshot_points_.begin(), snapshot_points_.end(),
                         at)) {
    if (snapshot_agent_) {
      snapshots_.push_back(take_snapshot(population.agents.at(*snapshot_agent_), at));
    } else {
      for (const auto& agent : population.agents) {
        snapshots_.push_back(take_snapshot(agent, at));
      }
    }
  }
}

void write_series_csv(std::ostream& out, std::span<const SeriesPoint> series) {
  out << kSeriesCsvHeader << '\n';
  for (const auto& p : series) {
    out << p.interaction << ',' << fixed6(p.success_window_avg) << ','
        << fixed6(p.mean_ontology_size) << ',' << fixed6(p.mean_inventory_size)
        << ',' << p.distinct_forms_population << ','
        << fixed6(p.mean_forms_per_meaning) << ','
        << fixed6(p.mean_meanings_per_form) << '\n';
  }
}

std::vector<SeriesPoint> read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSeriesCsvHeader) {
    throw ConfigError("series.csv: unexpected header");
  }
  std::vector<SeriesPoint> series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw ConfigError("series.csv: expected 7 fields in '" + line + "'");
    }
    try {
      series.push_back(SeriesPoint{std::stoull(f[0]), std::stod(f[1]),
                                   std::stod(f[2]), std::stod(f[3]),
                                   std::stoull(f[4]), std::stod(f[5]),
                                   std::stod(f[6])});
    } catch (const std::exception&) {
      throw ConfigError("series.csv: malformed row '" + line + "'");
    }
  }
  return series;
}

std::string snapshots_to_json(std::span<const LexiconSnapshot> snapshots) {
  json doc = json::array();
  for (const auto& s : snapshots) {
    json entries = json::array();
    for (const auto& e : s.entries) {
      json forms = json::array();
      for (const auto& f : e.forms) {
        forms.push_back({{"form", f.form}, {"score", f.score}});
      }
      entries.push_back({{"category_id", e.category.value},
                         {"prototype", prototype_json(e.prototype)},
                         {"forms", std::move(forms)}});
    }
    doc.push_back({{"interaction", s.interaction},
                   {"agent_id", s.agent.value},
                   {"entries", std::move(entries)}});
  }
  return doc.dump(2) + "\n";
}

std::vector<LexiconSnapshot> snapshots_from_json(std::string_view text) {
  std::vector<LexiconSnapshot> out;
  try {
    for (const auto& s : json::parse(text)) {
      LexiconSnapshot snapshot;
      snapshot.interaction = s.at("interaction").get<std::uint64_t>();
      snapshot.agent = AgentId{s.at("agent_id").get<std::uint32_t>()};
      for (const auto& e : s.at("entries")) {
        SnapshotEntry entry{CategoryId{e.at("category_id").get<std::uint32_t>()},
                            prototype_from(e.at("prototype")),
                            {}};
        for (const auto& f : e.at("forms")) {
          entry.forms.push_back(
              {f.at("form").get<std::string>(), f.at("score").get<double>()});
        }
        snapshot.entries.push_back(std::move(entry));
      }
      out.push_back(std::move(snapshot));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("snapshots.json: ") + e.what());
  }
  return out;
}

std::string snapshots_to_html(std::span<const LexiconSnapshot> snapshots) {
  std::ostringstream os;
  os << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
        "<title>Colour lexicon snapshots</title>\n<style>\n"
        "body{font-family:sans-serif}\n"
        ".row{display:flex;flex-wrap:wrap;gap:8px;margin:4px 0 16px}\n"
        ".swatch{width:120px;min-height:80px;padding:4px;border:1px solid #444;"
        "font-size:12px}\n"
        ".swatch span{background:#fff;padding:0 2px}\n"
        "</style>\n</head>\n<body>\n";
  for (const auto& s : snapshots) {
    os << "<h3>agent " << s.agent.value << " after " << s.interaction
       << " games</h3>\n<div class=\"row\">\n";
    for (const auto& e : s.entries) {
      os << "<div class=\"swatch\" style=\"background:rgb("
         << css_channel(e.prototype.r) << ',' << css_channel(e.prototype.g)
         << ',' << css_channel(e.prototype.b) << ")\" title=\"category "
         << e.category.value << "\">";
      for (const auto& f : e.forms) {
        os << "<span>" << html_escape(f.form) << ' ' << fixed(f.score, 2)
           << "</span><br>";
      }
      os << "</div>\n";
    }
    os << "</div>\n";
  }
  os << "</body>\n</html>\n";
  return os.str();
}

std::string ontology_to_json(const Ontology& ontology) {
  json doc = json::array();
  for (const auto& c : ontology.categories()) {
    doc.push_back({{"category_id", c.id.value},
                   {"prototype", prototype_json(c.prototype)}});
  }
  return doc.dump();
}

Ontology ontology_from_json(std::string_view text) {
  Ontology ontology;
  try {
    for (const auto& c : json::parse(text)) {
      ontology.restore(ColourCategory{
          CategoryId{c.at("category_id").get<std::uint32_t>()},
          prototype_from(c.at("prototype"))});
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("ontology json: ") + e.what());
  }
  return ontology;
}

std::string inventory_to_json(const ConstructionInventory& inventory) {
  json doc = json::array();
  for (const auto& c : inventory.constructions()) {
    doc.push_back({{"form", c.form},
                   {"category_id", c.category.value},
                   {"score", c.score}});
  }
  return doc.dump();
}

void export_run(std::span<const SeriesPoint> series,
                std::span<const LexiconSnapshot> snapshots,
                const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir.string(), ec.message());

  std::ostringstream csv;
  write_series_csv(csv, series);
  write_file(out_dir / "series.csv", csv.str());
  write_file(out_dir / "snapshots.json", snapshots_to_json(snapshots));
  write_file(out_dir / "snapshots.html", snapshots_to_html(snapshots));
}

std::vector<AggregatePoint> aggregate_runs(
    std::span<const std::vector<SeriesPoint>> runs) {
  if (runs.empty()) return {};
  const auto length = runs.front().size();
  for (const auto& run : runs) {
    if (run.size() != length) {
      throw ConfigError("cannot aggregate runs of different lengths");
    }
  }
  std::vector<AggregatePoint> out;
  out.reserve(length);
  std::vector<double> xs(runs.size());
  for (std::size_t k = 0; k < length; ++k) {
    AggregatePoint point;
    point.interaction = runs.front()[k].interaction;
    for (const auto& run : runs) {
      if (run[k].interaction != point.interaction) {
        throw ConfigError("cannot aggregate runs with different sampling");
      }
    }
    auto field = [&](auto member) {
      for (std::size_t r = 0; r < runs.size(); ++r) {
        xs[r] = static_cast<double>(runs[r][k].*member);
      }
      return stats(xs);
    };
    point.success_window_avg = field(&SeriesPoint::success_window_avg);
    point.mean_ontology_size = field(&SeriesPoint::mean_ontology_size);
    point.mean_inventory_size = field(&SeriesPoint::mean_inventory_size);
    point.distinct_forms_population =
        field(&SeriesPoint::distinct_forms_population);
    point.mean_forms_per_meaning = field(&SeriesPoint::mean_forms_per_meaning);
    point.mean_meanings_per_form = field(&SeriesPoint::mean_meanings_per_form);
    out.push_back(point);
  }
  return out;
}

void write_aggregate_csv(std::ostream& out,
                         std::span<const AggregatePoint> aggregate) {
  out << "interaction";
  for (const char* name :
       {"success_window_avg", "mean_ontology_size", "mean_inventory_size",
        "distinct_forms_population", "mean_forms_per_meaning",
        "mean_meanings_per_form"}) {
    out << ',' << name << "_mean," << name << "_std";
  }
  out << '\n';
  for (const auto& p : aggregate) {
    out << p.interaction;
    for (const FieldStats* s :
         {&p.success_window_avg, &p.mean_ontology_size, &p.mean_inventory_size,
          &p.distinct_forms_population, &p.mean_forms_per_meaning,
          &p.mean_meanings_per_form}) {
      out << ',' << fixed6(s->mean) << ',' << fixed6(s->std);
    }
    out << '\n';
  }
}

}  // namespace naming_game
