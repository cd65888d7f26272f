#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polder/personas.hpp"
#include "polder/records.hpp"

namespace polder {

enum class Purpose { Generate, Translate, Answer, Judge };

std::string_view purpose_name(Purpose p);

// Carrier for one chat-completion call.
struct ChatRequest {
  std::vector<Turn> messages;
  double temperature = 1.0;
  int max_tokens = 4096;
  Purpose purpose = Purpose::Generate;

  bool operator==(const ChatRequest&) const = default;
};

class TemplateError : public std::runtime_error {
 public:
  explicit TemplateError(const std::string& what)
      : std::runtime_error(what) {}
};

enum class CriterionKey { Dutchness, Helpfulness, Conciseness };

std::string_view criterion_name(CriterionKey key);

// One judging rubric: a question plus descriptions for scores 1..5.
struct Criterion {
  CriterionKey key = CriterionKey::Dutchness;
  std::string question_nl;
  std::map<int, std::string> options;
};

// The three built-in criteria, in scoring order.
const std::vector<Criterion>& builtin_criteria();
const Criterion& criterion(CriterionKey key);

// Self-chat prompt: the vendored multi-turn simulation template with
// {persona} and {subject} filled in. Sent as a single user message.
ChatRequest render_generation_prompt(const Persona& persona,
                                     const SeedPrompt& seed);

// Rubric prompt for one (prompt, response, criterion); temperature 0.
ChatRequest render_rating_prompt(const std::string& prompt_nl,
                                 const std::string& response,
                                 const Criterion& criterion);

ChatRequest render_translation_request(
    const std::string& text_en,
    const std::optional<std::string>& register_hint = std::nullopt);

ChatRequest render_answer_request(const std::optional<std::string>& system_nl,
                                  const std::string& user_nl);

// Raw vendored template text, exposed for golden-file checks.
namespace templates {
extern const std::string_view kGeneration;
extern const std::string_view kRating;
extern const std::string_view kTranslationSystem;
extern const std::string_view kRatingOption;  // "- {score}: {beschrijving}"
}  // namespace templates

}  // namespace polder
