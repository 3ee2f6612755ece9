#include "naming_game/colour_world.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

#include "naming_game/errors.h"

namespace naming_game {
namespace {

double clip_channel(double v) {
  if (std::isnan(v)) return kChannelMin;
  return std::clamp(v, kChannelMin, kChannelMax);
}

std::string describe(const ColourValue& c) {
  std::ostringstream os;
  os << '(' << c.r << ", " << c.g << ", " << c.b << ')';
  return os.str();
}

}  // namespace

ColourValue ColourValue::clipped(double r, double g, double b) {
  return ColourValue{clip_channel(r), clip_channel(g), clip_channel(b)};
}

double squared_distance(const ColourValue& a, const ColourValue& b) {
  const double dr = a.r - b.r;
  const double dg = a.g - b.g;
  const double db = a.b - b.b;
  return dr * dr + dg * dg + db * db;
}

double distance(const ColourValue& a, const ColourValue& b) {
  return std::sqrt(squared_distance(a, b));
}

bool Scene::contains(ObjectId id) const {
  return std::binary_search(object_ids.begin(), object_ids.end(), id);
}

const Percept* WorldModel::find(ObjectId id) const {
  auto it = std::find_if(percepts.begin(), percepts.end(),
                         [id](const Percept& p) { return p.object_id == id; });
  return it == percepts.end() ? nullptr : &*it;
}

const WorldObject& World::object(ObjectId id) const {
  if (id.value >= objects_.size()) {
    throw ConsistencyError("unknown object id " + std::to_string(id.value));
  }
  return objects_[id.value];
}

World make_world(std::span<const ColourValue> palette,
                 std::size_t objects_per_scene, double min_separation) {
  if (palette.empty()) throw ConfigError("palette must not be empty");
  if (objects_per_scene < 1 || objects_per_scene > palette.size()) {
    throw ConfigError("objects_per_scene must be in [1, " +
                      std::to_string(palette.size()) + "], got " +
                      std::to_string(objects_per_scene));
  }
  if (!(min_separation >= 0.0)) {
    throw ConfigError("min_separation must be non-negative");
  }
  for (const auto& c : palette) {
    if (ColourValue::clipped(c.r, c.g, c.b) != c) {
      throw ConfigError("palette colour " + describe(c) +
                        " has a channel outside [0, 255]");
    }
  }
  for (std::size_t i = 0; i < palette.size(); ++i) {
    for (std::size_t j = i + 1; j < palette.size(); ++j) {
      const double d = distance(palette[i], palette[j]);
      if (d < min_separation) {
        std::ostringstream os;
        os << "palette entries " << i << ' ' << describe(palette[i]) << " and "
           << j << ' ' << describe(palette[j]) << " are " << d
           << " apart, below min_separation " << min_separation;
        throw ConfigError(os.str());
      }
    }
  }

  World world;
  world.objects_.reserve(palette.size());
  for (std::size_t i = 0; i < palette.size(); ++i) {
    world.objects_.push_back(
        WorldObject{ObjectId{static_cast<std::uint32_t>(i)}, palette[i]});
  }
  world.objects_per_scene_ = objects_per_scene;
  world.min_separation_ = min_separation;
  return world;
}

std::vector<ColourValue> default_palette() {
  return {
      {255, 0, 0},   {0, 255, 0},   {0, 0, 255},
      {255, 255, 0}, {255, 0, 255}, {0, 255, 255},
  };
}

std::vector<ColourValue> random_palette(std::size_t size, double min_separation,
                                        Rng& rng, std::size_t max_attempts) {
  std::uniform_int_distribution<int> channel(0, 255);
  std::vector<ColourValue> palette;
  palette.reserve(size);
  for (std::size_t attempt = 0; palette.size() < size; ++attempt) {
    if (attempt >= max_attempts) {
      throw ConfigError("could not place " + std::to_string(size) +
                        " colours at min_separation " +
                        std::to_string(min_separation));
    }
    ColourValue candidate{static_cast<double>(channel(rng)),
                          static_cast<double>(channel(rng)),
                          static_cast<double>(channel(rng))};
    const bool fits = std::all_of(
        palette.begin(), palette.end(), [&](const ColourValue& c) {
          const double d = distance(c, candidate);
          return d >= min_separation && d > 0.0;
        });
    if (fits) palette.push_back(candidate);
  }
  return palette;
}

Scene sample_scene(const World& world, Rng& rng) {
  std::vector<ObjectId> all;
  all.reserve(world.objects().size());
  for (const auto& o : world.objects()) all.push_back(o.id);

  Scene scene;
  scene.object_ids.reserve(world.objects_per_scene());
  // Selection sampling keeps the input order, so ids come out ascending.
  std::sample(all.begin(), all.end(), std::back_inserter(scene.object_ids),
              static_cast<std::ptrdiff_t>(world.objects_per_scene()), rng);
  return scene;
}

WorldModel perceive(const World& world, const Scene& scene, double noise_std,
                    Rng& rng) {
  WorldModel model;
  model.percepts.reserve(scene.object_ids.size());
  if (!(noise_std >= 0.0)) throw ConfigError("noise_std must be >= 0");
  if (noise_std == 0.0) {
    for (ObjectId id : scene.object_ids) {
      model.percepts.push_back(Percept{id, world.object(id).true_colour});
    }
    return model;
  }
  std::normal_distribution<double> noise(0.0, noise_std);
  for (ObjectId id : scene.object_ids) {
    const ColourValue& truth = world.object(id).true_colour;
    const double r = truth.r + noise(rng);
    const double g = truth.g + noise(rng);
    const double b = truth.b + noise(rng);
    model.percepts.push_back(Percept{id, ColourValue::clipped(r, g, b)});
  }
  return model;
}

}  // namespace naming_game
