#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naming_game/colour_world.h"
#include "naming_game/types.h"

namespace naming_game {

// Carries one utterance from a speak to the matching hear.
struct UtteranceChannel {
  std::optional<std::string> pending;
};

// Hardware side of a body. The simulated backend is the only one shipped;
// live robots would add a subclass and a make_body kind, callers unchanged.
// Argument checking happens in EmbodimentHandle before dispatch, so backends
// only carry out the effect.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string_view kind() const = 0;
  virtual void embody(AgentId agent) = 0;
  virtual WorldModel observe_world(const World& world, const Scene& scene,
                                   Rng& rng) = 0;
  virtual bool speak(UtteranceChannel& channel, const std::string& utterance) = 0;
  virtual std::string hear(UtteranceChannel& channel) = 0;
  virtual ObjectId point(ObjectId object) = 0;
  virtual bool nod() = 0;
  virtual bool shake_head() = 0;
  // Units of `angle` are backend-defined.
  virtual bool look_direction(std::string_view direction, double angle) = 0;
};

struct SensorSettings {
  double noise_std{3.0};
};

class SimulatedBackend final : public Backend {
 public:
  explicit SimulatedBackend(SensorSettings settings = {});

  std::string_view kind() const override { return "simulated"; }
  void embody(AgentId) override {}
  WorldModel observe_world(const World& world, const Scene& scene,
                           Rng& rng) override;
  bool speak(UtteranceChannel& channel, const std::string& utterance) override;
  std::string hear(UtteranceChannel& channel) override;
  ObjectId point(ObjectId object) override { return object; }
  bool nod() override { return true; }
  bool shake_head() override { return true; }
  bool look_direction(std::string_view, double) override { return true; }

  const SensorSettings& settings() const { return settings_; }

 private:
  SensorSettings settings_;
};

// A body an agent senses and acts through for the duration of one game.
class EmbodimentHandle {
 public:
  EmbodimentHandle(std::string identity, std::unique_ptr<Backend> backend);

  const std::string& identity() const { return identity_; }
  std::string_view kind() const { return backend_->kind(); }
  std::optional<AgentId> embodied_agent() const { return agent_; }

  void embody(AgentId agent);
  WorldModel observe_world(const World& world, const Scene& scene, Rng& rng);
  // Throws ProtocolError on an occupied channel or an empty utterance.
  bool speak(UtteranceChannel& channel, std::string_view utterance);
  // Throws ProtocolError when nothing is pending.
  std::string hear(UtteranceChannel& channel);
  // Throws ProtocolError when `object` is not part of `scene`.
  ObjectId point(const Scene& scene, ObjectId object);
  bool nod();
  bool shake_head();
  bool look_direction(std::string_view direction, double angle);

  Backend& backend() { return *backend_; }

 private:
  std::string identity_;
  std::unique_ptr<Backend> backend_;
  std::optional<AgentId> agent_;
};

std::vector<std::string> supported_backend_kinds();

// Throws ConfigError listing the supported kinds when `kind` is unknown.
EmbodimentHandle make_body(std::string_view kind, std::string identity,
                           SensorSettings settings = {});

// Wire format for a remote speech capability: the body POSTs
// {"speech": <utterance>} to kSpeechEndpoint and reads back an object with a
// boolean "success" key. No HTTP transport is included.
inline constexpr std::string_view kSpeechEndpoint = "/speech/say";

std::string encode_speech_request(std::string_view utterance);
// Throws ProtocolError if the body is not JSON or lacks a boolean "success".
bool decode_speech_response(std::string_view body);

}  // namespace naming_game
