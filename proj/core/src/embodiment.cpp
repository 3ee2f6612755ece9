#include "naming_game/embodiment.h"

#include <nlohmann/json.hpp>

#include "naming_game/errors.h"

namespace naming_game {

SimulatedBackend::SimulatedBackend(SensorSettings settings)
    : settings_(settings) {
  if (!(settings_.noise_std >= 0.0)) {
    throw ConfigError("noise_std must be >= 0");
  }
}

WorldModel SimulatedBackend::observe_world(const World& world,
                                           const Scene& scene, Rng& rng) {
  return perceive(world, scene, settings_.noise_std, rng);
}

bool SimulatedBackend::speak(UtteranceChannel& channel,
                             const std::string& utterance) {
  channel.pending = utterance;
  return true;
}

std::string SimulatedBackend::hear(UtteranceChannel& channel) {
  std::string heard = std::move(*channel.pending);
  channel.pending.reset();
  return heard;
}

EmbodimentHandle::EmbodimentHandle(std::string identity,
                                   std::unique_ptr<Backend> backend)
    : identity_(std::move(identity)), backend_(std::move(backend)) {
  if (!backend_) throw ConfigError("body '" + identity_ + "' has no backend");
}

void EmbodimentHandle::embody(AgentId agent) {
  agent_ = agent;
  backend_->embody(agent);
}

WorldModel EmbodimentHandle::observe_world(const World& world,
                                           const Scene& scene, Rng& rng) {
  return backend_->observe_world(world, scene, rng);
}

bool EmbodimentHandle::speak(UtteranceChannel& channel,
                             std::string_view utterance) {
  if (utterance.empty()) {
    throw ProtocolError("body '" + identity_ + "': empty word form");
  }
  if (channel.pending) {
    throw ProtocolError("body '" + identity_ +
                        "': channel already holds an utterance");
  }
  return backend_->speak(channel, std::string(utterance));
}

std::string EmbodimentHandle::hear(UtteranceChannel& channel) {
  if (!channel.pending) {
    throw ProtocolError("body '" + identity_ + "': nothing to hear");
  }
  return backend_->hear(channel);
}

ObjectId EmbodimentHandle::point(const Scene& scene, ObjectId object) {
  if (!scene.contains(object)) {
    throw ProtocolError("body '" + identity_ + "': object " +
                        std::to_string(object.value) + " is not in the scene");
  }
  return backend_->point(object);
}

bool EmbodimentHandle::nod() { return backend_->nod(); }

bool EmbodimentHandle::shake_head() { return backend_->shake_head(); }

bool EmbodimentHandle::look_direction(std::string_view direction,
                                      double angle) {
  return backend_->look_direction(direction, angle);
}

std::vector<std::string> supported_backend_kinds() { return {"simulated"}; }

EmbodimentHandle make_body(std::string_view kind, std::string identity,
                           SensorSettings settings) {
  if (kind == "simulated") {
    return EmbodimentHandle(std::move(identity),
                            std::make_unique<SimulatedBackend>(settings));
  }
  std::string supported;
  for (const auto& k : supported_backend_kinds()) {
    if (!supported.empty()) supported += ", ";
    supported += k;
  }
  throw ConfigError("unsupported body kind '" + std::string(kind) +
                    "' (supported: " + supported + ")");
}

std::string encode_speech_request(std::string_view utterance) {
  return nlohmann::json{{"speech", std::string(utterance)}}.dump();
}

bool decode_speech_response(std::string_view body) {
  const auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ProtocolError("speech response is not a JSON object");
  }
  const auto it = doc.find("success");
  if (it == doc.end() || !it->is_boolean()) {
    throw ProtocolError("speech response lacks a boolean 'success'");
  }
  return it->get<bool>();
}

}  // namespace naming_game
