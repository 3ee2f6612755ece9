#include "naming_game/lexicon.h"

#include <algorithm>

#include "naming_game/errors.h"

namespace naming_game {

const Construction* ConstructionInventory::find(std::string_view form,
                                                CategoryId category) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Construction& c) {
                           return c.category == category && c.form == form;
                         });
  return it == entries_.end() ? nullptr : &*it;
}

bool ConstructionInventory::knows_form(std::string_view form) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Construction& c) { return c.form == form; });
}

const Construction& ConstructionInventory::add(std::string form,
                                               CategoryId category,
                                               double initial_score) {
  if (form.empty()) throw ConsistencyError("construction form is empty");
  if (!(initial_score > 0.0 && initial_score <= 1.0)) {
    throw ConsistencyError("initial score must be in (0, 1]");
  }
  if (find(form, category)) {
    throw ConsistencyError("construction '" + form + "' <-> category " +
                           std::to_string(category.value) + " already exists");
  }
  entries_.push_back(Construction{std::move(form), category, initial_score});
  return entries_.back();
}

std::optional<Construction> ConstructionInventory::produce(
    CategoryId category) const {
  const Construction* best = nullptr;
  for (const auto& c : entries_) {
    if (c.category != category) continue;
    if (!best || c.score > best->score ||
        (c.score == best->score && c.form < best->form)) {
      best = &c;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::optional<Construction> ConstructionInventory::comprehend(
    std::string_view form) const {
  const Construction* best = nullptr;
  for (const auto& c : entries_) {
    if (c.form != form) continue;
    if (!best || c.score > best->score ||
        (c.score == best->score && c.category < best->category)) {
      best = &c;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::vector<Construction>::iterator ConstructionInventory::locate(
    const Construction& used) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Construction& c) {
                           return c.category == used.category &&
                                  c.form == used.form;
                         });
  if (it == entries_.end()) {
    throw ConsistencyError("construction '" + used.form + "' <-> category " +
                           std::to_string(used.category.value) +
                           " is not in the inventory");
  }
  return it;
}

void ConstructionInventory::prune() {
  std::erase_if(entries_, [](const Construction& c) {
    return c.score <= kRemovalThreshold;
  });
}

void ConstructionInventory::reward_and_inhibit(const Construction& used,
                                               Role role, double inc,
                                               double inh) {
  if (!(inc >= 0.0 && inh >= 0.0)) {
    throw ConsistencyError("score deltas must be non-negative");
  }
  auto it = locate(used);
  it->score = std::min(1.0, it->score + inc);
  for (auto& c : entries_) {
    const bool competitor =
        role == Role::kSpeaker
            ? (c.category == used.category && c.form != used.form)
            : (c.form == used.form && c.category != used.category);
    if (competitor) c.score = std::max(0.0, c.score - inh);
  }
  prune();
}

void ConstructionInventory::punish(const Construction& used, double dec) {
  if (!(dec >= 0.0)) throw ConsistencyError("decrement must be non-negative");
  auto it = locate(used);
  it->score = std::max(0.0, it->score - dec);
  prune();
}

std::string random_word_form(Rng& rng) {
  std::uniform_int_distribution<std::size_t> consonant(0,
                                                       kConsonants.size() - 1);
  std::uniform_int_distribution<std::size_t> vowel(0, kVowels.size() - 1);
  std::string form;
  form.reserve(2 * kSyllablesPerWord);
  for (int i = 0; i < kSyllablesPerWord; ++i) {
    form += kConsonants[consonant(rng)];
    form += kVowels[vowel(rng)];
  }
  return form;
}

std::string invent_word_form(const ConstructionInventory& inventory,
                             Rng& rng) {
  std::string form = random_word_form(rng);
  while (inventory.knows_form(form)) form = random_word_form(rng);
  return form;
}

}  // namespace naming_game
