#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "naming_game/types.h"

namespace naming_game {

inline constexpr double kChannelMin = 0.0;
inline constexpr double kChannelMax = 255.0;
inline constexpr double kDefaultMinSeparation = 100.0;

// A point in raw three-channel RGB space. Channels are kept in [0, 255];
// construct through `clipped` when the input may be out of range.
struct ColourValue {
  double r{0.0};
  double g{0.0};
  double b{0.0};

  static ColourValue clipped(double r, double g, double b);

  friend bool operator==(const ColourValue&, const ColourValue&) = default;
};

double squared_distance(const ColourValue& a, const ColourValue& b);
double distance(const ColourValue& a, const ColourValue& b);

struct WorldObject {
  ObjectId id;
  ColourValue true_colour;
};

struct Scene {
  std::vector<ObjectId> object_ids;  // ascending, distinct

  bool contains(ObjectId id) const;
};

struct Percept {
  ObjectId object_id;
  ColourValue observed_colour;
};

// One agent's private view of a scene: exactly one percept per scene object,
// in scene order.
struct WorldModel {
  std::vector<Percept> percepts;

  const Percept* find(ObjectId id) const;
  bool empty() const { return percepts.empty(); }
};

// Immutable after construction; safe to share between runs.
class World {
 public:
  const std::vector<WorldObject>& objects() const { return objects_; }
  std::size_t objects_per_scene() const { return objects_per_scene_; }
  double min_separation() const { return min_separation_; }

  const WorldObject& object(ObjectId id) const;

 private:
  friend World make_world(std::span<const ColourValue>, std::size_t, double);

  std::vector<WorldObject> objects_;
  std::size_t objects_per_scene_{1};
  double min_separation_{kDefaultMinSeparation};
};

// Builds a world with one object per palette entry; object ids follow palette
// order. Throws ConfigError when the palette is empty, when objects_per_scene
// is outside [1, |palette|], or when two palette entries are closer than
// min_separation (the message names the pair).
World make_world(std::span<const ColourValue> palette,
                 std::size_t objects_per_scene,
                 double min_separation = kDefaultMinSeparation);

// Six saturated corners of the RGB cube: red, green, blue, yellow, magenta,
// cyan. Smallest pairwise distance is 255.
std::vector<ColourValue> default_palette();

// Integer-valued colours drawn uniformly from the cube, rejecting any
// candidate closer than min_separation to one already accepted. Throws
// ConfigError if `size` colours cannot be placed within the attempt budget.
std::vector<ColourValue> random_palette(std::size_t size, double min_separation,
                                        Rng& rng,
                                        std::size_t max_attempts = 100000);

// objects_per_scene distinct objects, uniform over subsets.
Scene sample_scene(const World& world, Rng& rng);

// Adds i.i.d. zero-mean Gaussian noise (per channel) to each scene object's
// true colour and clips the result into [0, 255].
WorldModel perceive(const World& world, const Scene& scene, double noise_std,
                    Rng& rng);

}  // namespace naming_game
