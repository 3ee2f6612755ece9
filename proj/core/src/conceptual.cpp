#include "naming_game/conceptual.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <string>

#include "naming_game/errors.h"

namespace naming_game {

const ColourCategory* Ontology::find(CategoryId id) const {
  auto it = std::find_if(categories_.begin(), categories_.end(),
                         [id](const ColourCategory& c) { return c.id == id; });
  return it == categories_.end() ? nullptr : &*it;
}

const ColourCategory& Ontology::at(CategoryId id) const {
  if (const auto* c = find(id)) return *c;
  throw ConsistencyError("unknown category " + std::to_string(id.value));
}

ColourCategory& Ontology::mutable_at(CategoryId id) {
  return const_cast<ColourCategory&>(std::as_const(*this).at(id));
}

std::optional<CategoryMatch> Ontology::closest(
    const ColourValue& observation) const {
  std::optional<CategoryMatch> best;
  double best_sq = 0.0;
  for (const auto& c : categories_) {
    const double sq = squared_distance(c.prototype, observation);
    if (!best || sq < best_sq || (sq == best_sq && c.id < best->id)) {
      best = CategoryMatch{c.id, 0.0};
      best_sq = sq;
    }
  }
  if (best) best->distance = std::sqrt(best_sq);
  return best;
}

const ColourCategory& Ontology::invent(const ColourValue& observation) {
  categories_.push_back(ColourCategory{CategoryId{next_id_++}, observation});
  return categories_.back();
}

const ColourValue& Ontology::shift_prototype(CategoryId id,
                                             const ColourValue& observation,
                                             double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw ConsistencyError("shift rate must be in [0, 1]");
  }
  auto& p = mutable_at(id).prototype;
  p = ColourValue::clipped(p.r + rate * (observation.r - p.r),
                           p.g + rate * (observation.g - p.g),
                           p.b + rate * (observation.b - p.b));
  return p;
}

void Ontology::restore(const ColourCategory& category) {
  if (find(category.id)) {
    throw ConsistencyError("duplicate category " +
                           std::to_string(category.id.value));
  }
  categories_.push_back(category);
  next_id_ = std::max(next_id_, category.id.value + 1);
}

std::optional<SemanticNetwork> conceptualise(const Ontology& ontology,
                                             const Percept& topic,
                                             const WorldModel& model) {
  const auto match = ontology.closest(topic.observed_colour);
  if (!match) return std::nullopt;
  const ColourValue& prototype = ontology.at(match->id).prototype;
  const double topic_sq = squared_distance(topic.observed_colour, prototype);
  for (const auto& p : model.percepts) {
    if (p.object_id == topic.object_id) continue;
    if (squared_distance(p.observed_colour, prototype) <= topic_sq) {
      return std::nullopt;
    }
  }
  return SemanticNetwork{match->id};
}

std::optional<Percept> interpret(const Ontology& ontology,
                                 const SemanticNetwork& network,
                                 const WorldModel& model) {
  const ColourValue& prototype = ontology.at(network.category).prototype;
  const Percept* best = nullptr;
  double best_sq = 0.0;
  bool tied = false;
  for (const auto& p : model.percepts) {
    const double sq = squared_distance(p.observed_colour, prototype);
    if (!best || sq < best_sq) {
      best = &p;
      best_sq = sq;
      tied = false;
    } else if (sq == best_sq) {
      tied = true;
    }
  }
  if (!best || tied) return std::nullopt;
  return *best;
}

}  // namespace naming_game
