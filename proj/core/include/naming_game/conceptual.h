#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "naming_game/colour_world.h"
#include "naming_game/types.h"

namespace naming_game {

inline constexpr double kDefaultShiftRate = 0.05;

struct ColourCategory {
  CategoryId id;
  ColourValue prototype;
};

struct CategoryMatch {
  CategoryId id;
  double distance{0.0};
};

// Semantic network of a single filter-by-closest-colour node bound to one
// category: executed against a world model it keeps the object closest to
// the category's prototype.
struct SemanticNetwork {
  static constexpr std::string_view kPrimitive = "filter-by-closest-colour";

  CategoryId category;

  friend bool operator==(const SemanticNetwork&, const SemanticNetwork&) = default;
};

// An agent's private set of prototype colour categories. Categories are
// never deleted and ids are never reused.
class Ontology {
 public:
  const std::vector<ColourCategory>& categories() const { return categories_; }
  std::size_t size() const { return categories_.size(); }
  bool empty() const { return categories_.empty(); }

  const ColourCategory* find(CategoryId id) const;
  // Throws ConsistencyError for an unknown id.
  const ColourCategory& at(CategoryId id) const;

  // Nearest prototype by Euclidean distance; equal distances go to the
  // smallest id. Absent for an empty ontology.
  std::optional<CategoryMatch> closest(const ColourValue& observation) const;

  // New category whose prototype is the observed colour.
  const ColourCategory& invent(const ColourValue& observation);

  // prototype += rate * (observation - prototype), clipped to the cube.
  // Throws ConsistencyError for an unknown id or a rate outside [0, 1].
  const ColourValue& shift_prototype(CategoryId id,
                                     const ColourValue& observation,
                                     double rate);

  // Restores a category verbatim (snapshots, tests). Keeps the id counter
  // ahead of every restored id. Throws ConsistencyError on a duplicate id.
  void restore(const ColourCategory& category);

 private:
  ColourCategory& mutable_at(CategoryId id);

  std::vector<ColourCategory> categories_;
  std::uint32_t next_id_{1};
};

// Returns the network for the topic's closest category if that category
// discriminates it: every other percept must be strictly farther from the
// prototype than the topic is.
std::optional<SemanticNetwork> conceptualise(const Ontology& ontology,
                                             const Percept& topic,
                                             const WorldModel& model);

// Executes the network: the unique percept nearest to the bound category's
// prototype. Absent on an empty model or when the nearest distance is tied.
// Throws ConsistencyError if the category is unknown.
std::optional<Percept> interpret(const Ontology& ontology,
                                 const SemanticNetwork& network,
                                 const WorldModel& model);

}  // namespace naming_game
