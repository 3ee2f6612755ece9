#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>

namespace naming_game {

// Every stochastic choice in a run draws from one of these, seeded once.
using Rng = std::mt19937_64;

template <typename Tag>
struct StrongId {
  std::uint32_t value{0};

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

using ObjectId = StrongId<struct ObjectIdTag>;
using CategoryId = StrongId<struct CategoryIdTag>;
using AgentId = StrongId<struct AgentIdTag>;

}  // namespace naming_game

template <typename Tag>
struct std::hash<naming_game::StrongId<Tag>> {
  std::size_t operator()(naming_game::StrongId<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
