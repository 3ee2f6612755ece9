#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naming_game/types.h"

namespace naming_game {

inline constexpr double kDefaultInitialScore = 0.5;
inline constexpr double kDefaultIncrement = 0.1;
inline constexpr double kDefaultInhibition = 0.1;
inline constexpr double kDefaultDecrement = 0.1;

// Scores at or below this are treated as zero and the construction is
// dropped. Absorbs rounding: 0.5 minus five steps of 0.1 is 2.8e-17, not 0.
inline constexpr double kRemovalThreshold = 1e-9;

enum class Role { kSpeaker, kHearer };

struct Construction {
  std::string form;
  CategoryId category;
  double score{kDefaultInitialScore};

  friend bool operator==(const Construction&, const Construction&) = default;
};

// Scored form <-> category pairs private to one agent. Scores stay in [0, 1]:
// rewards clamp at 1 and anything reaching the removal threshold is erased.
class ConstructionInventory {
 public:
  const std::vector<Construction>& constructions() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Construction* find(std::string_view form, CategoryId category) const;
  bool knows_form(std::string_view form) const;

  // Throws ConsistencyError on a duplicate (form, category) pair, an empty
  // form, or a score outside (0, 1].
  const Construction& add(std::string form, CategoryId category,
                          double initial_score = kDefaultInitialScore);

  // Highest score for the category; ties go to the lexicographically
  // smallest form.
  std::optional<Construction> produce(CategoryId category) const;

  // Highest score for the form; ties go to the smallest category id.
  std::optional<Construction> comprehend(std::string_view form) const;

  // Raises the used construction by `inc` (capped at 1) and lowers each
  // competitor by `inh`. Speaker competitors share the category with a
  // different form; hearer competitors share the form with a different
  // category. Throws ConsistencyError if `used` is not in the inventory or a
  // delta is negative.
  void reward_and_inhibit(const Construction& used, Role role, double inc,
                          double inh);

  // Lowers the used construction by `dec`, removing it at zero.
  void punish(const Construction& used, double dec);

 private:
  std::vector<Construction>::iterator locate(const Construction& used);
  void prune();

  std::vector<Construction> entries_;
};

inline constexpr std::string_view kConsonants = "bdfgklmnprstvwz";
inline constexpr std::string_view kVowels = "aeiou";
inline constexpr int kSyllablesPerWord = 3;

// Random consonant-vowel word, e.g. "fusemo".
std::string random_word_form(Rng& rng);

// random_word_form, redrawn until the inventory does not already use it.
std::string invent_word_form(const ConstructionInventory& inventory, Rng& rng);

}  // namespace naming_game
