#include "polder/filters.hpp"

#include <sstream>

#include "polder/jsonl.hpp"
#include "polder/text.hpp"

namespace polder {

namespace {

std::string dehyphenate(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '-') out += c;
  }
  return out;
}

struct CompiledPattern {
  std::string original;
  std::vector<std::string> needles;  // lowercase, NFC
};

std::vector<CompiledPattern> compile(const std::vector<std::string>& patterns) {
  std::vector<CompiledPattern> out;
  for (const std::string& p : patterns) {
    CompiledPattern cp;
    cp.original = p;
    const std::string folded = text::to_lower(text::normalize_nfc(p));
    cp.needles.push_back(folded);
    if (folded.find('-') != std::string::npos) {
      cp.needles.push_back(dehyphenate(folded));
    }
    out.push_back(std::move(cp));
  }
  return out;
}

// Per evaluate_record's contract, checks run in this order: language,
// non-Latin, banned, apology, cutoff. All matches are reported.
class RecordEvaluator {
 public:
  explicit RecordEvaluator(const FilterRuleSet& rules)
      : rules_(rules),
        banned_(compile(rules.banned_substrings)),
        apology_(compile(rules.apology_substrings)),
        cutoff_(compile(rules.cutoff_substrings)) {}

  void check_field(const std::string& field, const std::string& content,
                   std::vector<FilterReason>& reasons) const {
    check_language(field, content, reasons);
    if (auto offending = contains_non_latin(content, rules_.non_latin_strict)) {
      reasons.push_back(
          {"non_latin", field, text::encode_utf8(*offending)});
    }
    const std::string folded = text::to_lower(content);
    match_set(banned_, "banned", field, folded, reasons);
    match_set(apology_, "apology", field, folded, reasons);
    match_set(cutoff_, "cutoff", field, folded, reasons);
  }

 private:
  void check_language(const std::string& field, const std::string& content,
                      std::vector<FilterReason>& reasons) const {
    if (rules_.required_language.empty()) return;
    LanguageGuess guess;
    try {
      guess = LanguageDetector::builtin().detect(content);
    } catch (const TextTooShortError&) {
      return;  // too little signal to judge; other rules still apply
    }
    const bool wrong_language = guess.language != rules_.required_language;
    const bool low_confidence =
        guess.confidence < rules_.min_language_confidence;
    const bool low_margin = guess.margin < rules_.min_language_margin;
    if (wrong_language || low_confidence || low_margin) {
      std::ostringstream evidence;
      evidence << guess.language << " conf="
               << static_cast<int>(guess.confidence * 100) / 100.0
               << " margin="
               << static_cast<int>(guess.margin * 100) / 100.0;
      reasons.push_back({"language", field, evidence.str()});
    }
  }

  static void match_set(const std::vector<CompiledPattern>& patterns,
                        const std::string& rule, const std::string& field,
                        const std::string& folded_content,
                        std::vector<FilterReason>& reasons) {
    for (const CompiledPattern& p : patterns) {
      for (const std::string& needle : p.needles) {
        if (folded_content.find(needle) != std::string::npos) {
          reasons.push_back({rule, field, p.original});
          break;
        }
      }
    }
  }

  const FilterRuleSet& rules_;
  std::vector<CompiledPattern> banned_;
  std::vector<CompiledPattern> apology_;
  std::vector<CompiledPattern> cutoff_;
};

template <typename Record>
FilterPassResult<Record> filter_pass(const std::vector<Record>& records,
                                     const FilterRuleSet& rules) {
  FilterPassResult<Record> out;
  out.report.input = records.size();
  for (const Record& r : records) {
    FilterDecision decision = evaluate_record(r, rules);
    if (decision.keep) {
      out.kept.push_back(r);
    } else {
      ++out.report.dropped;
      const FilterReason& first = decision.reasons.front();
      ++out.report.drops_by_rule[first.rule];
      ++out.report.drops_by_field[first.field];
    }
  }
  out.report.kept = out.kept.size();
  return out;
}

}  // namespace

FilterRuleSet FilterRuleSet::defaults() {
  FilterRuleSet r;
  r.banned_substrings = {"AI-assistent", "AI-model", "ChatGPT",
                         "GPT-3",        "GPT-4",    "ShareGPT"};
  r.apology_substrings = {"sorry", "spijt me"};
  r.cutoff_substrings = {"knowledge cutoff", "kennisafsluiting",
                         "kennis tot", "mijn kennis reikt tot",
                         "trainingsdata tot"};
  return r;
}

FilterRuleSet rules_from_json(const nlohmann::ordered_json& j) {
  FilterRuleSet r;
  r.banned_substrings = j.at("banned_substrings").get<std::vector<std::string>>();
  r.apology_substrings =
      j.at("apology_substrings").get<std::vector<std::string>>();
  r.cutoff_substrings =
      j.at("cutoff_substrings").get<std::vector<std::string>>();
  r.required_language = j.value("required_language", std::string("nl"));
  r.min_language_confidence = j.value("min_language_confidence", 0.5);
  r.min_language_margin = j.value("min_language_margin", 0.1);
  r.non_latin_strict = j.value("non_latin_strict", false);
  return r;
}

nlohmann::ordered_json rules_to_json(const FilterRuleSet& rules) {
  nlohmann::ordered_json j;
  j["banned_substrings"] = rules.banned_substrings;
  j["apology_substrings"] = rules.apology_substrings;
  j["cutoff_substrings"] = rules.cutoff_substrings;
  j["required_language"] = rules.required_language;
  j["min_language_confidence"] = rules.min_language_confidence;
  j["min_language_margin"] = rules.min_language_margin;
  j["non_latin_strict"] = rules.non_latin_strict;
  return j;
}

FilterRuleSet load_rules(const std::filesystem::path& path) {
  return rules_from_json(nlohmann::ordered_json::parse(read_text_file(path)));
}

std::optional<char32_t> contains_non_latin(std::string_view text_utf8,
                                           bool strict) {
  std::size_t i = 0;
  while (i < text_utf8.size()) {
    text::DecodedChar d = text::decode_utf8(text_utf8, i);
    switch (text::classify_char(d.cp)) {
      case text::CharClass::OtherLetter:
        return d.cp;
      case text::CharClass::EmojiOrSymbol:
      case text::CharClass::Other:
        if (strict && d.cp >= 0x80) return d.cp;
        break;
      default:
        break;
    }
    i += d.width;
  }
  return std::nullopt;
}

FilterDecision evaluate_record(const Conversation& record,
                               const FilterRuleSet& rules) {
  RecordEvaluator evaluator(rules);
  FilterDecision decision;
  for (const Turn& t : record.turns) {
    if (t.role != Role::Assistant) continue;
    evaluator.check_field("assistant", t.content, decision.reasons);
  }
  decision.keep = decision.reasons.empty();
  return decision;
}

FilterDecision evaluate_record(const PreferencePair& record,
                               const FilterRuleSet& rules) {
  RecordEvaluator evaluator(rules);
  FilterDecision decision;
  evaluator.check_field("prompt", record.prompt_nl, decision.reasons);
  evaluator.check_field("chosen", record.chosen, decision.reasons);
  evaluator.check_field("rejected", record.rejected, decision.reasons);
  decision.keep = decision.reasons.empty();
  return decision;
}

nlohmann::ordered_json FilterReport::to_json() const {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["kept"] = kept;
  j["dropped"] = dropped;
  j["drops_by_rule"] = drops_by_rule;
  j["drops_by_field"] = drops_by_field;
  return j;
}

FilterPassResult<Conversation> run_filter_pass(
    const std::vector<Conversation>& records, const FilterRuleSet& rules) {
  return filter_pass(records, rules);
}

FilterPassResult<PreferencePair> run_filter_pass(
    const std::vector<PreferencePair>& records, const FilterRuleSet& rules) {
  return filter_pass(records, rules);
}

}  // namespace polder
