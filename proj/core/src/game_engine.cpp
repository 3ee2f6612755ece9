#include "naming_game/game_engine.h"

#include <algorithm>
#include <cmath>

#include "naming_game/errors.h"

namespace naming_game {
namespace {

World build_world(const ExperimentParams& params, Rng& rng) {
  if (params.palette_mode == PaletteMode::kRandom) {
    const auto palette = random_palette(params.random_palette_size,
                                        params.min_separation, rng);
    return make_world(palette, params.objects_per_scene, params.min_separation);
  }
  return make_world(params.palette, params.objects_per_scene,
                    params.min_separation);
}

std::array<EmbodimentHandle, 2> simulated_bodies(const ExperimentParams& p) {
  const SensorSettings sensors{p.noise_std};
  return {make_body("simulated", "body-A", sensors),
          make_body("simulated", "body-B", sensors)};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool is_unit(double v) { return v >= 0.0 && v <= 1.0; }

// A topic percept that coincides with another percept cannot be singled out
// by any prototype.
bool discriminable(const Percept& topic, const WorldModel& model) {
  return std::none_of(
      model.percepts.begin(), model.percepts.end(), [&](const Percept& p) {
        return p.object_id != topic.object_id &&
               p.observed_colour == topic.observed_colour;
      });
}

// Reuses a discriminating category or invents one. Absent when the topic is
// indistinguishable from another percept.
std::optional<SemanticNetwork> conceptualise_or_invent(Ontology& ontology,
                                                       const Percept& topic,
                                                       const WorldModel& model) {
  if (auto network = conceptualise(ontology, topic, model)) return network;
  if (!discriminable(topic, model)) return std::nullopt;
  ontology.invent(topic.observed_colour);
  return conceptualise(ontology, topic, model);
}

}  // namespace

void validate(const ExperimentParams& p) {
  require(p.population_size >= 2, "population_size must be >= 2");
  if (p.palette_mode == PaletteMode::kFixed) {
    require(!p.palette.empty(), "palette must not be empty");
    require(p.objects_per_scene >= 1 &&
                p.objects_per_scene <= p.palette.size(),
            "objects_per_scene must be in [1, palette size]");
  } else {
    require(p.random_palette_size >= 1, "random_palette_size must be >= 1");
    require(p.objects_per_scene >= 1 &&
                p.objects_per_scene <= p.random_palette_size,
            "objects_per_scene must be in [1, random_palette_size]");
  }
  require(p.min_separation >= 0.0 && std::isfinite(p.min_separation),
          "min_separation must be a finite value >= 0");
  require(p.noise_std >= 0.0 && std::isfinite(p.noise_std),
          "noise_std must be a finite value >= 0");
  require(p.initial_score > 0.0 && p.initial_score <= 1.0,
          "initial_score must be in (0, 1]");
  require(is_unit(p.inc), "inc must be in [0, 1]");
  require(is_unit(p.inh), "inh must be in [0, 1]");
  require(is_unit(p.dec), "dec must be in [0, 1]");
  require(is_unit(p.shift_rate), "shift_rate must be in [0, 1]");
  require(p.window >= 1, "window must be >= 1");
  require(p.sample_interval >= 1, "sample_interval must be >= 1");
  for (auto at : p.snapshot_points) {
    require(at >= 1, "snapshot points must be >= 1");
  }
  if (p.snapshot_agent) {
    require(*p.snapshot_agent < p.population_size,
            "snapshot_agent must be below population_size");
  }
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::kNone: return "none";
    case FailureReason::kUnknownWord: return "unknown_word";
    case FailureReason::kWrongReferent: return "wrong_referent";
    case FailureReason::kDegenerate: return "degenerate";
  }
  return "?";
}

Population Population::with_size(std::size_t size) {
  Population population;
  population.agents.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    population.agents[i].id = AgentId{static_cast<std::uint32_t>(i)};
  }
  return population;
}

std::pair<std::size_t, std::size_t> select_pair(std::size_t population_size,
                                                Rng& rng) {
  if (population_size < 2) {
    throw ConfigError("a game needs at least two agents, population has " +
                      std::to_string(population_size));
  }
  std::uniform_int_distribution<std::size_t> first(0, population_size - 1);
  std::uniform_int_distribution<std::size_t> second(0, population_size - 2);
  const std::size_t speaker = first(rng);
  std::size_t hearer = second(rng);
  if (hearer >= speaker) ++hearer;
  return {speaker, hearer};
}

Percept choose_topic(const WorldModel& model, Rng& rng) {
  if (model.empty()) throw ConsistencyError("cannot choose a topic: empty world model");
  std::uniform_int_distribution<std::size_t> pick(0, model.percepts.size() - 1);
  return model.percepts[pick(rng)];
}

void align(Agent& agent, Role role, const InteractionRecord& record,
           const ExperimentParams& params) {
  if (record.failure_reason == FailureReason::kDegenerate) return;
  GameState& game = agent.game;

  if (record.success) {
    if (!game.applied) return;
    agent.inventory.reward_and_inhibit(*game.applied, role, params.inc,
                                       params.inh);
    const ObjectId referent =
        role == Role::kSpeaker ? game.topic->object_id : *record.pointed;
    if (const Percept* seen = game.world_model.find(referent)) {
      agent.ontology.shift_prototype(game.applied->category,
                                     seen->observed_colour, params.shift_rate);
    }
    return;
  }

  if (game.applied) {
    agent.inventory.punish(*game.applied, params.dec);
  }
  const bool adopts =
      record.failure_reason == FailureReason::kUnknownWord ||
      (params.adopt_on_wrong_referent &&
       record.failure_reason == FailureReason::kWrongReferent);
  if (role == Role::kHearer && adopts && game.feedback_object &&
      game.utterance) {
    const Percept* shown = game.world_model.find(*game.feedback_object);
    if (!shown) return;
    const auto network =
        conceptualise_or_invent(agent.ontology, *shown, game.world_model);
    if (!network) return;
    if (!agent.inventory.find(*game.utterance, network->category)) {
      agent.inventory.add(*game.utterance, network->category,
                          params.initial_score);
    }
  }
}

Experiment::Experiment(ExperimentParams params, std::uint64_t seed)
    : Experiment(params, seed, simulated_bodies(params)) {}

Experiment::Experiment(ExperimentParams params, std::uint64_t seed,
                       std::array<EmbodimentHandle, 2> bodies)
    : params_((validate(params), std::move(params))),
      rng_(seed),
      world_(build_world(params_, rng_)),
      population_(Population::with_size(params_.population_size)),
      bodies_(std::move(bodies)) {}

InteractionRecord Experiment::run_interaction() {
  InteractionRecord record;
  record.interaction_number = ++played_;

  const auto [speaker_index, hearer_index] =
      select_pair(population_.agents.size(), rng_);
  Agent& speaker = population_.agents[speaker_index];
  Agent& hearer = population_.agents[hearer_index];
  EmbodimentHandle& speaker_body = bodies_[0];
  EmbodimentHandle& hearer_body = bodies_[1];
  record.speaker = speaker.id;
  record.hearer = hearer.id;

  const Scene scene = sample_scene(world_, rng_);
  record.scene = scene.object_ids;

  // 1. embody
  speaker_body.embody(speaker.id);
  speaker.body = 0;
  hearer_body.embody(hearer.id);
  hearer.body = 1;

  // 2. both observe, each with its own sensor noise
  speaker.game.world_model = speaker_body.observe_world(world_, scene, rng_);
  hearer.game.world_model = hearer_body.observe_world(world_, scene, rng_);

  // 3. topic
  speaker.game.topic = choose_topic(speaker.game.world_model, rng_);
  record.topic = speaker.game.topic->object_id;

  // 4. conceptualise, inventing a category once if nothing discriminates
  speaker.game.network = conceptualise_or_invent(
      speaker.ontology, *speaker.game.topic, speaker.game.world_model);

  if (speaker.game.network) {
    // 5. produce, inventing a word if the category has none
    auto produced = speaker.inventory.produce(speaker.game.network->category);
    if (!produced) {
      speaker.inventory.add(invent_word_form(speaker.inventory, rng_),
                            speaker.game.network->category,
                            params_.initial_score);
      produced = speaker.inventory.produce(speaker.game.network->category);
    }
    speaker.game.applied = produced;
    speaker.game.utterance = produced->form;
    record.utterance = produced->form;

    // 6. pass the utterance
    UtteranceChannel channel;
    speaker_body.speak(channel, *speaker.game.utterance);
    hearer.game.utterance = hearer_body.hear(channel);

    // 7. comprehend
    hearer.game.applied = hearer.inventory.comprehend(*hearer.game.utterance);
    if (!hearer.game.applied) {
      record.failure_reason = FailureReason::kUnknownWord;
    } else {
      // 8. interpret
      hearer.game.network = SemanticNetwork{hearer.game.applied->category};
      if (auto hypothesis = interpret(hearer.ontology, *hearer.game.network,
                                      hearer.game.world_model)) {
        hearer.game.hypothesized_topic = hypothesis->object_id;
      }
    }

    // 9. the hearer points at its hypothesis, if it has one
    if (hearer.game.hypothesized_topic) {
      record.pointed =
          hearer_body.point(scene, *hearer.game.hypothesized_topic);
    }

    // 10. nod on success, otherwise point at the topic
    record.success = record.pointed && *record.pointed == *record.topic;
    if (record.success) {
      speaker_body.nod();
    } else {
      if (record.failure_reason == FailureReason::kNone) {
        record.failure_reason = FailureReason::kWrongReferent;
      }
      hearer.game.feedback_object =
          speaker_body.point(scene, speaker.game.topic->object_id);
    }
  } else {
    record.failure_reason = FailureReason::kDegenerate;
  }

  // 11. both align
  align(speaker, Role::kSpeaker, record, params_);
  align(hearer, Role::kHearer, record, params_);

  speaker.game = GameState{};
  hearer.game = GameState{};
  speaker.body.reset();
  hearer.body.reset();
  return record;
}

}  // namespace naming_game
