#include <gtest/gtest.h>

#include <map>
#include <memory>

#include "naming_game/errors.h"
#include "naming_game/experiment_runner.h"
#include "naming_game/game_engine.h"
#include "naming_game/monitors.h"
#include "recording_backend.h"

namespace naming_game {
namespace {

std::string agent_state(const Agent& agent) {
  return ontology_to_json(agent.ontology) + inventory_to_json(agent.inventory);
}

TEST(SelectPair, UniformOverOrderedPairs) {
  Rng rng(1);
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const auto pair = select_pair(5, rng);
    ASSERT_NE(pair.first, pair.second);
    ++counts[pair];
  }
  ASSERT_EQ(counts.size(), 20u);
  for (const auto& [pair, n] : counts) EXPECT_NEAR(n / double(kDraws), 0.05, 0.01);
}

TEST(SelectPair, TwoAgentsSwapRoles) {
  Rng rng(2);
  int first_speaks = 0;
  for (int i = 0; i < 10000; ++i) {
    if (select_pair(2, rng).first == 0) ++first_speaks;
  }
  EXPECT_NEAR(first_speaks / 10000.0, 0.5, 0.02);
}

TEST(SelectPair, NeedsTwoAgents) {
  Rng rng(3);
  EXPECT_THROW(select_pair(1, rng), ConfigError);
  EXPECT_THROW(select_pair(0, rng), ConfigError);
}

TEST(ChooseTopic, UniformOverPercepts) {
  Rng rng(4);
  const WorldModel model{{{ObjectId{0}, {}}, {ObjectId{3}, {}}, {ObjectId{5}, {}}}};
  std::map<std::uint32_t, int> counts;
  for (int i = 0; i < 30000; ++i) ++counts[choose_topic(model, rng).object_id.value];
  for (const auto& [id, n] : counts) EXPECT_NEAR(n / 30000.0, 1.0 / 3.0, 0.02);
}

TEST(ChooseTopic, ForcedAndReplayable) {
  Rng rng(5);
  const WorldModel single{{{ObjectId{9}, {}}}};
  EXPECT_EQ(choose_topic(single, rng).object_id, ObjectId{9});
  EXPECT_THROW(choose_topic(WorldModel{}, rng), ConsistencyError);

  const WorldModel model{{{ObjectId{0}, {}}, {ObjectId{1}, {}}, {ObjectId{2}, {}}}};
  Rng a(6), b(6);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(choose_topic(model, a).object_id, choose_topic(model, b).object_id);
  }
}

TEST(RunInteraction, FirstGameInventsAndAdopts) {
  Experiment experiment(ExperimentParams{}, 42);
  const auto record = experiment.run_interaction();
  EXPECT_EQ(record.interaction_number, 1u);
  EXPECT_FALSE(record.success);
  EXPECT_EQ(record.failure_reason, FailureReason::kUnknownWord);
  ASSERT_TRUE(record.utterance);
  EXPECT_FALSE(record.pointed);

  const auto& speaker = experiment.population().agents[record.speaker.value];
  const auto& hearer = experiment.population().agents[record.hearer.value];
  ASSERT_EQ(speaker.ontology.size(), 1u);
  ASSERT_EQ(speaker.inventory.size(), 1u);
  EXPECT_EQ(speaker.inventory.constructions()[0].form, *record.utterance);
  EXPECT_DOUBLE_EQ(speaker.inventory.constructions()[0].score, 0.4);  // punished

  ASSERT_EQ(hearer.ontology.size(), 1u);
  ASSERT_EQ(hearer.inventory.size(), 1u);
  const auto& adopted = hearer.inventory.constructions()[0];
  EXPECT_EQ(adopted.form, *record.utterance);
  EXPECT_EQ(adopted.category, hearer.ontology.categories()[0].id);
  EXPECT_EQ(adopted.score, 0.5);
  // Both prototypes are noisy views of the same topic.
  const auto& topic_colour = experiment.world().object(*record.topic).true_colour;
  EXPECT_LT(distance(speaker.ontology.categories()[0].prototype, topic_colour), 20.0);
  EXPECT_LT(distance(hearer.ontology.categories()[0].prototype, topic_colour), 20.0);
  EXPECT_NE(speaker.ontology.categories()[0].prototype,
            hearer.ontology.categories()[0].prototype);

  for (const auto& agent : experiment.population().agents) {
    EXPECT_FALSE(agent.body);
    EXPECT_FALSE(agent.game.topic);
    EXPECT_TRUE(agent.game.world_model.empty());
  }
}

TEST(RunInteraction, ConvergedPopulationSucceedsWithoutInventing) {
  Experiment experiment(ExperimentParams{}, 43);
  for (int i = 0; i < 3000; ++i) experiment.run_interaction();
  std::size_t categories = 0;
  for (const auto& a : experiment.population().agents) categories += a.ontology.size();
  int successes = 0;
  for (int i = 0; i < 20; ++i) {
    const auto record = experiment.run_interaction();
    if (record.success) ++successes;
    EXPECT_EQ(record.failure_reason == FailureReason::kNone, record.success);
  }
  std::size_t after = 0;
  for (const auto& a : experiment.population().agents) after += a.ontology.size();
  EXPECT_EQ(successes, 20);
  EXPECT_EQ(after, categories);
}

TEST(RunInteraction, IndistinguishableObjectsAbortTheGame) {
  ExperimentParams params;
  params.palette = {{10, 10, 10}, {10, 10, 10}};
  params.min_separation = 0.0;
  params.objects_per_scene = 2;
  params.noise_std = 0.0;
  auto trace = std::make_shared<std::vector<std::string>>();
  Experiment experiment(params, 7, testing::recording_bodies(trace, 0.0));
  for (int i = 0; i < 10; ++i) {
    trace->clear();
    const auto record = experiment.run_interaction();
    EXPECT_FALSE(record.success);
    EXPECT_EQ(record.failure_reason, FailureReason::kDegenerate);
    EXPECT_FALSE(record.utterance);
    EXPECT_FALSE(record.pointed);
    const std::vector<std::string> want{"A:embody", "B:embody", "A:observe", "B:observe"};
    EXPECT_EQ(*trace, want);
  }
  for (const auto& agent : experiment.population().agents) {
    EXPECT_TRUE(agent.ontology.empty());
    EXPECT_TRUE(agent.inventory.empty());
  }
}

TEST(RunInteraction, OnlyTheTwoPlayersChange) {
  Experiment experiment(ExperimentParams{}, 44);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> before;
    for (const auto& a : experiment.population().agents) before.push_back(agent_state(a));
    const auto record = experiment.run_interaction();
    for (const auto& a : experiment.population().agents) {
      if (a.id == record.speaker || a.id == record.hearer) continue;
      EXPECT_EQ(agent_state(a), before[a.id.value]);
    }
  }
}

TEST(RunInteraction, RecordsAreConsistent) {
  Experiment experiment(ExperimentParams{}, 45);
  for (int i = 0; i < 1000; ++i) {
    const auto r = experiment.run_interaction();
    ASSERT_TRUE(r.topic);
    EXPECT_NE(r.speaker, r.hearer);
    EXPECT_EQ(r.scene.size(), 3u);
    EXPECT_EQ(r.success, r.pointed.has_value() && *r.pointed == *r.topic);
    if (r.success) {
      EXPECT_TRUE(r.utterance);
      EXPECT_EQ(r.failure_reason, FailureReason::kNone);
    } else {
      EXPECT_NE(r.failure_reason, FailureReason::kNone);
    }
    if (r.failure_reason == FailureReason::kUnknownWord) EXPECT_FALSE(r.pointed);
  }
}

TEST(RunInteraction, CapabilityCallsFollowTheScript) {
  auto trace = std::make_shared<std::vector<std::string>>();
  ExperimentParams params;
  Experiment experiment(params, 46, testing::recording_bodies(trace, params.noise_std));
  int with_hearer_point = 0;
  for (int i = 0; i < 300; ++i) {
    trace->clear();
    const auto r = experiment.run_interaction();
    std::vector<std::string> want{"A:embody", "B:embody", "A:observe", "B:observe",
                                  "A:speak",  "B:hear"};
    if (r.pointed) {
      want.push_back("B:point");
      ++with_hearer_point;
    }
    want.push_back(r.success ? "A:nod" : "A:point");
    ASSERT_EQ(*trace, want) << "game " << r.interaction_number;
  }
  EXPECT_GT(with_hearer_point, 0);
}

class AlignTest : public ::testing::Test {
 protected:
  ExperimentParams params_;
  Agent agent_;

  InteractionRecord record(bool success, FailureReason reason) {
    InteractionRecord r;
    r.success = success;
    r.failure_reason = reason;
    r.topic = ObjectId{0};
    r.pointed = success ? std::optional(ObjectId{0}) : std::nullopt;
    r.utterance = "fusemo";
    return r;
  }
};

TEST_F(AlignTest, SpeakerSuccessRewardsAndShifts) {
  const auto c1 = agent_.ontology.invent({0, 240, 0}).id;
  agent_.inventory.add("fusemo", c1);
  agent_.inventory.add("ponuro", c1, 0.3);
  agent_.game.world_model.percepts = {{ObjectId{0}, {20, 250, 10}}};
  agent_.game.topic = agent_.game.world_model.percepts[0];
  agent_.game.applied = *agent_.inventory.find("fusemo", c1);
  align(agent_, Role::kSpeaker, record(true, FailureReason::kNone), params_);
  EXPECT_DOUBLE_EQ(agent_.inventory.find("fusemo", c1)->score, 0.6);
  EXPECT_DOUBLE_EQ(agent_.inventory.find("ponuro", c1)->score, 0.2);
  const auto& p = agent_.ontology.at(c1).prototype;
  EXPECT_DOUBLE_EQ(p.r, 1.0);  // 0 + 0.05 * 20
  EXPECT_DOUBLE_EQ(p.g, 240.5);
  EXPECT_DOUBLE_EQ(p.b, 0.5);
}

TEST_F(AlignTest, HearerSuccessShiftsTowardItsOwnPercept) {
  const auto c = agent_.ontology.invent({100, 100, 100}).id;
  agent_.inventory.add("fusemo", c);
  agent_.game.world_model.percepts = {{ObjectId{0}, {120, 100, 100}}};
  agent_.game.applied = *agent_.inventory.find("fusemo", c);
  align(agent_, Role::kHearer, record(true, FailureReason::kNone), params_);
  EXPECT_DOUBLE_EQ(agent_.ontology.at(c).prototype.r, 101.0);
}

TEST_F(AlignTest, HearerAdoptsUnknownWord) {
  agent_.game.world_model.percepts = {{ObjectId{0}, {5, 243, 2}}, {ObjectId{1}, {250, 5, 5}}};
  agent_.game.utterance = "fusemo";
  agent_.game.feedback_object = ObjectId{0};
  align(agent_, Role::kHearer, record(false, FailureReason::kUnknownWord), params_);
  ASSERT_EQ(agent_.ontology.size(), 1u);
  const auto& category = agent_.ontology.categories()[0];
  EXPECT_EQ(category.prototype, (ColourValue{5, 243, 2}));
  ASSERT_EQ(agent_.inventory.size(), 1u);
  EXPECT_EQ(agent_.inventory.constructions()[0],
            (Construction{"fusemo", category.id, 0.5}));
}

TEST_F(AlignTest, HearerAdoptionReusesDiscriminatingCategory) {
  const auto c = agent_.ontology.invent({0, 250, 0}).id;
  agent_.inventory.add("sobele", c);
  agent_.game.world_model.percepts = {{ObjectId{0}, {5, 243, 2}}, {ObjectId{1}, {250, 5, 5}}};
  agent_.game.utterance = "fusemo";
  agent_.game.feedback_object = ObjectId{0};
  align(agent_, Role::kHearer, record(false, FailureReason::kUnknownWord), params_);
  EXPECT_EQ(agent_.ontology.size(), 1u);
  ASSERT_NE(agent_.inventory.find("fusemo", c), nullptr);
}

TEST_F(AlignTest, WrongReferentPunishesOnly) {
  const auto c = agent_.ontology.invent({0, 0, 0}).id;
  agent_.inventory.add("fusemo", c, 0.1);
  agent_.game.world_model.percepts = {{ObjectId{0}, {5, 243, 2}}};
  agent_.game.applied = *agent_.inventory.find("fusemo", c);
  agent_.game.utterance = "fusemo";
  agent_.game.feedback_object = ObjectId{0};
  align(agent_, Role::kHearer, record(false, FailureReason::kWrongReferent), params_);
  EXPECT_TRUE(agent_.inventory.empty());
  EXPECT_EQ(agent_.ontology.size(), 1u);
}

TEST_F(AlignTest, WrongReferentAdoptionWhenEnabled) {
  params_.adopt_on_wrong_referent = true;
  const auto c = agent_.ontology.invent({0, 0, 0}).id;
  agent_.inventory.add("fusemo", c, 0.5);
  agent_.game.world_model.percepts = {{ObjectId{0}, {5, 243, 2}}, {ObjectId{1}, {3, 3, 3}}};
  agent_.game.applied = *agent_.inventory.find("fusemo", c);
  agent_.game.utterance = "fusemo";
  agent_.game.feedback_object = ObjectId{0};
  align(agent_, Role::kHearer, record(false, FailureReason::kWrongReferent), params_);
  EXPECT_DOUBLE_EQ(agent_.inventory.find("fusemo", c)->score, 0.4);
  EXPECT_EQ(agent_.ontology.size(), 2u);
  EXPECT_EQ(agent_.inventory.size(), 2u);
}

TEST_F(AlignTest, DegenerateChangesNothing) {
  const auto c = agent_.ontology.invent({0, 0, 0}).id;
  agent_.inventory.add("fusemo", c);
  agent_.game.applied = *agent_.inventory.find("fusemo", c);
  align(agent_, Role::kSpeaker, record(false, FailureReason::kDegenerate), params_);
  EXPECT_EQ(agent_.inventory.find("fusemo", c)->score, 0.5);
}

TEST(RunExperiment, ZeroInteractions) {
  ExperimentParams params;
  params.num_interactions = 0;
  const auto result = run_experiment(params, 1);
  EXPECT_TRUE(result.records.empty());
  EXPECT_TRUE(result.series.empty());
  ASSERT_EQ(result.population.agents.size(), 5u);
  for (const auto& a : result.population.agents) {
    EXPECT_TRUE(a.ontology.empty());
    EXPECT_TRUE(a.inventory.empty());
  }
}

TEST(RunExperiment, SameSeedSameRun) {
  ExperimentParams params;
  params.num_interactions = 500;
  const auto a = run_experiment(params, 99);
  const auto b = run_experiment(params, 99);
  EXPECT_EQ(a.records, b.records);
  for (std::size_t i = 0; i < a.population.agents.size(); ++i) {
    EXPECT_EQ(agent_state(a.population.agents[i]), agent_state(b.population.agents[i]));
  }
  const auto c = run_experiment(params, 100);
  EXPECT_NE(a.records, c.records);
}

TEST(RunExperiment, DefaultsConverge) {
  const auto result = run_experiment(ExperimentParams{}, 42);
  ASSERT_EQ(result.records.size(), 1000u);
  EXPECT_GE(windowed_success(result.records, 50, 1000), 0.95);
  EXPECT_EQ(result.series.back().mean_ontology_size, 6.0);
}

TEST(RunExperiment, ConfigErrorsBeforeFirstGame) {
  ExperimentParams params;
  params.population_size = 1;
  EXPECT_THROW(run_experiment(params, 1), ConfigError);
  params = {};
  params.palette = {{0, 0, 0}, {1, 1, 1}};
  params.objects_per_scene = 2;
  EXPECT_THROW(run_experiment(params, 1), ConfigError);
  params = {};
  params.inc = -0.1;
  EXPECT_THROW(run_experiment(params, 1), ConfigError);
}

TEST(RunExperiment, RandomPaletteMode) {
  ExperimentParams params;
  params.palette_mode = PaletteMode::kRandom;
  params.random_palette_size = 5;
  params.num_interactions = 50;
  Experiment a(params, 3), b(params, 3);
  ASSERT_EQ(a.world().objects().size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(a.world().objects()[i].true_colour, b.world().objects()[i].true_colour);
  }
}

}  // namespace
}  // namespace naming_game
