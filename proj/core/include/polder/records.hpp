#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polder {

enum class Role { System, User, Assistant };

std::string_view role_name(Role role);
std::optional<Role> role_from_name(std::string_view name);

struct Turn {
  Role role = Role::User;
  std::string content;

  bool operator==(const Turn&) const = default;
};

// One English seed instruction, the unit of pipeline input.
struct SeedPrompt {
  std::string id;
  std::optional<std::string> system;
  std::string user_en;
  std::string source;

  bool operator==(const SeedPrompt&) const = default;
};

// An optional system turn at position 0, then strict user/assistant
// alternation ending on assistant. The unit of SFT output.
struct Conversation {
  std::string id;
  std::vector<Turn> turns;
  std::optional<std::string> persona_name;
  std::optional<std::string> seed_id;

  bool operator==(const Conversation&) const = default;
};

// Per-criterion judge scores for one response (1..5 each).
struct RatingSet {
  int dutchness = 0;
  int helpfulness = 0;
  int conciseness = 0;

  double average() const {
    return (dutchness + helpfulness + conciseness) / 3.0;
  }

  bool operator==(const RatingSet&) const = default;
};

enum class DecisionMode { Naive, Judged };

std::string_view decision_mode_name(DecisionMode mode);
std::optional<DecisionMode> decision_mode_from_name(std::string_view name);

// A prompt with a chosen and a rejected response, the unit of preference
// output.
struct PreferencePair {
  std::string id;
  std::optional<std::string> system;
  std::string prompt_nl;
  std::string chosen;
  std::string rejected;
  std::string chosen_model;
  std::string rejected_model;
  std::optional<RatingSet> chosen_ratings;
  std::optional<RatingSet> rejected_ratings;
  DecisionMode decision_mode = DecisionMode::Naive;

  bool operator==(const PreferencePair&) const = default;
};

struct ManifestEntry {
  std::string path;
  double fraction = 1.0;
  std::string name;
};

struct SplitSpec {
  double test_ratio = 0.1;
  std::uint64_t seed = 0;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  SplitSpec split;
};

enum class ViolationKind {
  // Conversation invariants
  EmptyConversation,
  SystemTurnMisplaced,
  FirstTurnNotUser,
  AlternationBroken,
  LastTurnNotAssistant,
  EmptyTurn,
  // PreferencePair invariants
  IdenticalResponses,
  IdenticalModels,
  MissingRatings,
  RatingOutOfRange,
  EmptyPrompt,
};

struct Violation {
  ViolationKind kind = ViolationKind::EmptyConversation;
  std::size_t turn_index = 0;

  bool operator==(const Violation&) const = default;
};

std::string violation_message(const Violation& v);

// Total functions: empty result iff every invariant holds.
std::vector<Violation> validate_conversation(const Conversation& conv);
std::vector<Violation> validate_pair(const PreferencePair& pair);

}  // namespace polder
