#include "naming_game/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "naming_game/errors.h"

namespace naming_game {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

std::uint64_t as_unsigned(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) fail(key, "must not be negative");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  fail(key, "expected a non-negative integer, got " + v.dump());
}

double as_real(const json& v, const std::string& key) {
  if (!v.is_number()) fail(key, "expected a number, got " + v.dump());
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) fail(key, "expected a string, got " + v.dump());
  return v.get<std::string>();
}

std::vector<ColourValue> as_palette(const json& v, const std::string& key) {
  if (!v.is_array()) fail(key, "expected a list of [r, g, b] triplets");
  std::vector<ColourValue> palette;
  for (const auto& triplet : v) {
    if (!triplet.is_array() || triplet.size() != 3) {
      fail(key, "expected [r, g, b], got " + triplet.dump());
    }
    double ch[3];
    for (int i = 0; i < 3; ++i) {
      const auto c = as_unsigned(triplet[i], key);
      if (c > 255) fail(key, "channel out of [0, 255] in " + triplet.dump());
      ch[i] = static_cast<double>(c);
    }
    palette.push_back({ch[0], ch[1], ch[2]});
  }
  return palette;
}

json to_json(const ExperimentConfig& config) {
  const auto& p = config.params;
  json palette = json::array();
  for (const auto& c : p.palette) {
    palette.push_back({std::lround(c.r), std::lround(c.g), std::lround(c.b)});
  }
  json snapshot_agent = "all";
  if (p.snapshot_agent) snapshot_agent = *p.snapshot_agent;
  return json{
      {"population_size", p.population_size},
      {"palette_mode", p.palette_mode == PaletteMode::kFixed ? "fixed" : "random"},
      {"palette", std::move(palette)},
      {"random_palette_size", p.random_palette_size},
      {"min_separation", p.min_separation},
      {"objects_per_scene", p.objects_per_scene},
      {"num_interactions", p.num_interactions},
      {"noise_std", p.noise_std},
      {"initial_score", p.initial_score},
      {"inc", p.inc},
      {"inh", p.inh},
      {"dec", p.dec},
      {"shift_rate", p.shift_rate},
      {"adopt_on_wrong_referent", p.adopt_on_wrong_referent},
      {"window", p.window},
      {"sample_interval", p.sample_interval},
      {"snapshot_points", p.snapshot_points},
      {"snapshot_agent", std::move(snapshot_agent)},
      {"runs", config.runs},
      {"seed", config.seed},
      {"out_dir", config.out_dir.string()},
      {"parallel", config.parallel},
  };
}

ExperimentConfig from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  const json known = to_json(ExperimentConfig{});
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }

  ExperimentConfig config;
  auto& p = config.params;
  for (const auto& [key, v] : doc.items()) {
    if (key == "population_size") p.population_size = as_unsigned(v, key);
    else if (key == "palette_mode") {
      const auto mode = as_string(v, key);
      if (mode == "fixed") p.palette_mode = PaletteMode::kFixed;
      else if (mode == "random") p.palette_mode = PaletteMode::kRandom;
      else fail(key, "expected \"fixed\" or \"random\"");
    }
    else if (key == "palette") p.palette = as_palette(v, key);
    else if (key == "random_palette_size") p.random_palette_size = as_unsigned(v, key);
    else if (key == "min_separation") p.min_separation = as_real(v, key);
    else if (key == "objects_per_scene") p.objects_per_scene = as_unsigned(v, key);
    else if (key == "num_interactions") p.num_interactions = as_unsigned(v, key);
    else if (key == "noise_std") p.noise_std = as_real(v, key);
    else if (key == "initial_score") p.initial_score = as_real(v, key);
    else if (key == "inc") p.inc = as_real(v, key);
    else if (key == "inh") p.inh = as_real(v, key);
    else if (key == "dec") p.dec = as_real(v, key);
    else if (key == "shift_rate") p.shift_rate = as_real(v, key);
    else if (key == "adopt_on_wrong_referent") {
      if (!v.is_boolean()) fail(key, "expected true or false");
      p.adopt_on_wrong_referent = v.get<bool>();
    }
    else if (key == "window") p.window = as_unsigned(v, key);
    else if (key == "sample_interval") p.sample_interval = as_unsigned(v, key);
    else if (key == "snapshot_points") {
      if (!v.is_array()) fail(key, "expected a list of interaction numbers");
      p.snapshot_points.clear();
      for (const auto& at : v) p.snapshot_points.push_back(as_unsigned(at, key));
    }
    else if (key == "snapshot_agent") {
      if (v.is_string() && v.get<std::string>() == "all") p.snapshot_agent.reset();
      else if (v.is_number_integer()) p.snapshot_agent = as_unsigned(v, key);
      else fail(key, "expected an agent index or \"all\"");
    }
    else if (key == "runs") {
      const auto runs = as_unsigned(v, key);
      if (runs > UINT32_MAX) fail(key, "too large");
      config.runs = static_cast<std::uint32_t>(runs);
    }
    else if (key == "seed") config.seed = as_unsigned(v, key);
    else if (key == "out_dir") config.out_dir = as_string(v, key);
    else if (key == "parallel") config.parallel = as_unsigned(v, key);
  }
  return config;
}

// Interprets command-line text for `key` using the type of its default.
json flag_value(const std::string& key, const std::string& text,
                const json& defaults) {
  if (!defaults.contains(key)) throw ConfigError("unknown option '" + key + "'");
  const json& model = defaults.at(key);
  if (key == "snapshot_points") {
    json points = json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto v = json::parse(item, nullptr, false);
      if (v.is_discarded() || !v.is_number_unsigned()) {
        fail(key, "expected a comma list of interaction numbers, got '" + text + "'");
      }
      points.push_back(v);
    }
    return points;
  }
  if (model.is_string() && key != "snapshot_agent") return text;
  const auto v = json::parse(text, nullptr, false);
  if (v.is_discarded()) {
    if (key == "snapshot_agent") return text;
    fail(key, "cannot parse '" + text + "'");
  }
  return v;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) {
  return to_json(config).dump(2) + "\n";
}

ExperimentConfig config_from_json(std::string_view text) {
  const auto doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ConfigError("config is not valid JSON");
  auto config = from_json(doc);
  validate(config);
  return config;
}

void validate(const ExperimentConfig& config) {
  validate(config.params);
  if (config.runs < 1) throw ConfigError("runs must be >= 1");
  if (config.parallel < 1) throw ConfigError("parallel must be >= 1");
  if (config.out_dir.empty()) throw ConfigError("out_dir must not be empty");
  const auto& p = config.params;
  if (p.palette_mode == PaletteMode::kFixed) {
    make_world(p.palette, p.objects_per_scene, p.min_separation);
  }
}

ExperimentConfig parse_config(const std::optional<std::filesystem::path>& file,
                              const FlagOverrides& flags,
                              const std::optional<std::string>& env_out_dir) {
  const json defaults = to_json(ExperimentConfig{});
  json merged = defaults;
  if (env_out_dir && !env_out_dir->empty()) merged["out_dir"] = *env_out_dir;

  if (file) {
    std::ifstream in(*file);
    if (!in) throw ConfigError("cannot read config file " + file->string());
    const auto doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw ConfigError(file->string() + ": not a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
      if (!defaults.contains(key)) {
        throw ConfigError(file->string() + ": unknown config key '" + key + "'");
      }
      merged[key] = value;
    }
  }
  for (const auto& [key, text] : flags) {
    merged[key] = flag_value(key, text, defaults);
  }

  auto config = from_json(merged);
  validate(config);
  return config;
}

}  // namespace naming_game
