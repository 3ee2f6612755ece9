#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "naming_game/colour_world.h"
#include "naming_game/conceptual.h"
#include "naming_game/embodiment.h"
#include "naming_game/lexicon.h"
#include "naming_game/types.h"

namespace naming_game {

enum class PaletteMode { kFixed, kRandom };

// Everything that shapes one run. Defaults reproduce the reference setup:
// five agents, six colours, three objects per game.
struct ExperimentParams {
  std::size_t population_size{5};
  PaletteMode palette_mode{PaletteMode::kFixed};
  std::vector<ColourValue> palette{default_palette()};
  std::size_t random_palette_size{6};  // kRandom only
  double min_separation{kDefaultMinSeparation};
  std::size_t objects_per_scene{3};
  std::uint64_t num_interactions{1000};
  double noise_std{3.0};
  double initial_score{kDefaultInitialScore};
  double inc{kDefaultIncrement};
  double inh{kDefaultInhibition};
  double dec{kDefaultDecrement};
  double shift_rate{kDefaultShiftRate};
  // Off: a hearer that misread a known word only punishes it. On: it also
  // learns the word for the object the speaker pointed at.
  bool adopt_on_wrong_referent{false};
  std::size_t window{50};
  std::uint64_t sample_interval{1};
  std::vector<std::uint64_t> snapshot_points{10, 20, 40, 100, 250};
  std::optional<std::size_t> snapshot_agent;  // empty: every agent
};

// Throws ConfigError naming the first out-of-range field.
void validate(const ExperimentParams& params);

enum class FailureReason { kNone, kUnknownWord, kWrongReferent, kDegenerate };

std::string_view to_string(FailureReason reason);

// Scratch state of one game. Reset between interactions.
struct GameState {
  WorldModel world_model;
  std::optional<Percept> topic;
  std::optional<SemanticNetwork> network;
  std::optional<Construction> applied;
  std::optional<std::string> utterance;
  std::optional<ObjectId> hypothesized_topic;
  std::optional<ObjectId> feedback_object;  // what the speaker pointed at
};

struct Agent {
  AgentId id;
  Ontology ontology;
  ConstructionInventory inventory;
  std::optional<std::size_t> body;  // index into the experiment's bodies
  GameState game;
};

// Fully connected: any two agents may play.
struct Population {
  std::vector<Agent> agents;

  static Population with_size(std::size_t size);
};

struct InteractionRecord {
  std::uint64_t interaction_number{0};
  AgentId speaker;
  AgentId hearer;
  std::vector<ObjectId> scene;
  std::optional<ObjectId> topic;  // empty only if the game never got a topic
  std::optional<std::string> utterance;
  std::optional<ObjectId> pointed;  // the hearer's pointing
  bool success{false};
  FailureReason failure_reason{FailureReason::kNone};

  friend bool operator==(const InteractionRecord&,
                         const InteractionRecord&) = default;
};

// Uniform over ordered pairs of distinct agents. Throws ConfigError for
// populations smaller than two.
std::pair<std::size_t, std::size_t> select_pair(std::size_t population_size,
                                                Rng& rng);

// Uniform over the model's percepts. Throws ConsistencyError on an empty
// model.
Percept choose_topic(const WorldModel& model, Rng& rng);

// Post-game learning for one participant, driven by its GameState and the
// finished record. Success: reward the applied construction (role-specific
// lateral inhibition) and shift the used category toward this agent's
// percept of the referent. Failure: punish the applied construction; a
// hearer that did not know the word (or misread it, with
// adopt_on_wrong_referent) adopts it for the object the speaker pointed at.
// Degenerate games change nothing.
void align(Agent& agent, Role role, const InteractionRecord& record,
           const ExperimentParams& params);

// Owns one run: world, population, bodies and the random stream. Strictly
// sequential.
class Experiment {
 public:
  // Simulated bodies with the run's noise level.
  Experiment(ExperimentParams params, std::uint64_t seed);
  // Custom bodies; the first serves the speaker, the second the hearer.
  Experiment(ExperimentParams params, std::uint64_t seed,
             std::array<EmbodimentHandle, 2> bodies);

  // Plays the next game through the full interaction script.
  InteractionRecord run_interaction();

  const ExperimentParams& params() const { return params_; }
  const World& world() const { return world_; }
  const Population& population() const { return population_; }
  Population& population() { return population_; }
  std::uint64_t interactions_played() const { return played_; }

 private:
  ExperimentParams params_;
  Rng rng_;
  World world_;
  Population population_;
  std::array<EmbodimentHandle, 2> bodies_;
  std::uint64_t played_{0};
};

}  // namespace naming_game
