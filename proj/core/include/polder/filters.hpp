#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polder/lang_id.hpp"
#include "polder/records.hpp"

namespace polder {

// Post-creation filtering rules. Matching is case-insensitive substring on
// NFC-normalized text; patterns containing '-' also match their
// hyphen-free form ("GPT-4" matches "GPT4").
struct FilterRuleSet {
  std::vector<std::string> banned_substrings;
  std::vector<std::string> apology_substrings;
  std::vector<std::string> cutoff_substrings;
  std::string required_language = "nl";
  double min_language_confidence = 0.5;
  double min_language_margin = 0.1;
  // Strict mode drops emoji and symbol characters too, reading the
  // non-Latin rule literally instead of as a foreign-script rule.
  bool non_latin_strict = false;

  static FilterRuleSet defaults();
};

FilterRuleSet rules_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json rules_to_json(const FilterRuleSet& rules);
FilterRuleSet load_rules(const std::filesystem::path& path);

struct FilterReason {
  std::string rule;      // language | non_latin | banned | apology | cutoff
  std::string field;     // assistant | prompt | chosen | rejected
  std::string evidence;  // matched pattern, offending char, or detector info
};

struct FilterDecision {
  bool keep = true;
  std::vector<FilterReason> reasons;
};

// First character whose script is neither Latin nor exempt (punctuation,
// digits, whitespace, combining marks and, unless strict, emoji/symbols).
std::optional<char32_t> contains_non_latin(std::string_view text,
                                           bool strict = false);

// Applies language, non-Latin and substring rules over every
// model-generated text field of the record: assistant turns for
// conversations; prompt, chosen and rejected for preference pairs.
FilterDecision evaluate_record(const Conversation& record,
                               const FilterRuleSet& rules);
FilterDecision evaluate_record(const PreferencePair& record,
                               const FilterRuleSet& rules);

struct FilterReport {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t dropped = 0;
  // Dropped records attributed to their first matched rule/field.
  std::map<std::string, std::size_t> drops_by_rule;
  std::map<std::string, std::size_t> drops_by_field;

  nlohmann::ordered_json to_json() const;
};

template <typename Record>
struct FilterPassResult {
  std::vector<Record> kept;
  FilterReport report;
};

// Order-preserving pass; |kept| + dropped == |input|. Running the pass
// again over `kept` drops nothing.
FilterPassResult<Conversation> run_filter_pass(
    const std::vector<Conversation>& records, const FilterRuleSet& rules);
FilterPassResult<PreferencePair> run_filter_pass(
    const std::vector<PreferencePair>& records, const FilterRuleSet& rules);

}  // namespace polder
