#include "polder/records.hpp"

#include <sstream>

#include "polder/text.hpp"

namespace polder {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::System: return "system";
    case Role::User: return "user";
    case Role::Assistant: return "assistant";
  }
  return "user";
}

std::optional<Role> role_from_name(std::string_view name) {
  if (name == "system") return Role::System;
  if (name == "user") return Role::User;
  if (name == "assistant") return Role::Assistant;
  return std::nullopt;
}

std::string_view decision_mode_name(DecisionMode mode) {
  return mode == DecisionMode::Naive ? "naive" : "judged";
}

std::optional<DecisionMode> decision_mode_from_name(std::string_view name) {
  if (name == "naive") return DecisionMode::Naive;
  if (name == "judged") return DecisionMode::Judged;
  return std::nullopt;
}

namespace {

std::string_view kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::EmptyConversation: return "EmptyConversation";
    case ViolationKind::SystemTurnMisplaced: return "SystemTurnMisplaced";
    case ViolationKind::FirstTurnNotUser: return "FirstTurnNotUser";
    case ViolationKind::AlternationBroken: return "AlternationBroken";
    case ViolationKind::LastTurnNotAssistant: return "LastTurnNotAssistant";
    case ViolationKind::EmptyTurn: return "EmptyTurn";
    case ViolationKind::IdenticalResponses: return "IdenticalResponses";
    case ViolationKind::IdenticalModels: return "IdenticalModels";
    case ViolationKind::MissingRatings: return "MissingRatings";
    case ViolationKind::RatingOutOfRange: return "RatingOutOfRange";
    case ViolationKind::EmptyPrompt: return "EmptyPrompt";
  }
  return "Unknown";
}

bool rating_in_range(const RatingSet& r) {
  auto ok = [](int s) { return s >= 1 && s <= 5; };
  return ok(r.dutchness) && ok(r.helpfulness) && ok(r.conciseness);
}

}  // namespace

std::string violation_message(const Violation& v) {
  std::ostringstream os;
  os << kind_name(v.kind) << "(" << v.turn_index << ")";
  return os.str();
}

std::vector<Violation> validate_conversation(const Conversation& conv) {
  std::vector<Violation> out;
  const auto& turns = conv.turns;
  if (turns.empty()) {
    out.push_back({ViolationKind::EmptyConversation, 0});
    return out;
  }

  for (std::size_t i = 0; i < turns.size(); ++i) {
    if (turns[i].role == Role::System && i != 0) {
      out.push_back({ViolationKind::SystemTurnMisplaced, i});
    }
    if (text::is_blank(turns[i].content)) {
      out.push_back({ViolationKind::EmptyTurn, i});
    }
  }

  const std::size_t first = turns[0].role == Role::System ? 1 : 0;
  if (first >= turns.size()) {
    // A lone system turn: there is no user/assistant exchange at all.
    out.push_back({ViolationKind::EmptyConversation, 0});
    return out;
  }
  if (turns[first].role != Role::User) {
    out.push_back({ViolationKind::FirstTurnNotUser, first});
  }
  for (std::size_t i = first + 1; i < turns.size(); ++i) {
    if (turns[i].role != Role::System && turns[i].role == turns[i - 1].role) {
      out.push_back({ViolationKind::AlternationBroken, i});
    }
  }
  if (turns.back().role != Role::Assistant) {
    out.push_back({ViolationKind::LastTurnNotAssistant, turns.size() - 1});
  }
  return out;
}

std::vector<Violation> validate_pair(const PreferencePair& pair) {
  std::vector<Violation> out;
  if (text::is_blank(pair.prompt_nl)) {
    out.push_back({ViolationKind::EmptyPrompt, 0});
  }
  if (text::trim(pair.chosen) == text::trim(pair.rejected)) {
    out.push_back({ViolationKind::IdenticalResponses, 0});
  }
  if (pair.chosen_model == pair.rejected_model) {
    out.push_back({ViolationKind::IdenticalModels, 0});
  }
  if (pair.decision_mode == DecisionMode::Judged &&
      (!pair.chosen_ratings || !pair.rejected_ratings)) {
    out.push_back({ViolationKind::MissingRatings, 0});
  }
  if ((pair.chosen_ratings && !rating_in_range(*pair.chosen_ratings)) ||
      (pair.rejected_ratings && !rating_in_range(*pair.rejected_ratings))) {
    out.push_back({ViolationKind::RatingOutOfRange, 0});
  }
  return out;
}

}  // namespace polder
