#include <doctest.h>

#include <polder/filters.hpp>
#include <polder/jsonl.hpp>

#include <fstream>

#include "support/test_util.hpp"

using namespace polder;

namespace {

Conversation with_assistant(const std::string& text) {
  Conversation c;
  c.id = "f";
  c.turns = {{Role::User, "Vertel eens?"}, {Role::Assistant, text}};
  return c;
}

}  // namespace

TEST_CASE("default rule set carries the documented vocabulary") {
  const FilterRuleSet r = FilterRuleSet::defaults();
  auto has = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  CHECK(has(r.banned_substrings, "AI-assistent"));
  CHECK(has(r.banned_substrings, "AI-model"));
  CHECK(has(r.banned_substrings, "ChatGPT"));
  CHECK(has(r.banned_substrings, "GPT-3"));
  CHECK(has(r.banned_substrings, "GPT-4"));
  CHECK(has(r.banned_substrings, "ShareGPT"));
  CHECK(has(r.apology_substrings, "sorry"));
  CHECK(has(r.apology_substrings, "spijt me"));
  CHECK(has(r.cutoff_substrings, "knowledge cutoff"));
  CHECK(r.required_language == "nl");
}

TEST_CASE("contains_non_latin") {
  CHECK_FALSE(contains_non_latin("Héél goed, ça va"));
  CHECK(contains_non_latin("Dit is 中文") == U'中');
  CHECK(contains_non_latin("привет") == U'п');
  CHECK_FALSE(contains_non_latin("Grappig 😀 toch?"));
  CHECK_FALSE(contains_non_latin("some math: 2 × 3 ≤ 7"));
  SUBCASE("strict mode flags emoji and symbols") {
    CHECK(contains_non_latin("Grappig 😀 toch?", /*strict=*/true) == U'😀');
    CHECK_FALSE(contains_non_latin("gewoon ascii!", /*strict=*/true));
  }
}

TEST_CASE("banned phrase in an assistant turn drops the record") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  FilterDecision d = evaluate_record(
      with_assistant("Als AI-model kan ik dat niet."), rules);
  CHECK_FALSE(d.keep);
  REQUIRE_FALSE(d.reasons.empty());
  CHECK(d.reasons.front().rule == "banned");
  CHECK(d.reasons.front().field == "assistant");
  CHECK(d.reasons.front().evidence == "AI-model");
}

TEST_CASE("apology detection") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  FilterDecision d = evaluate_record(
      with_assistant("Het spijt me, dat weet ik niet."), rules);
  CHECK_FALSE(d.keep);
  bool found = false;
  for (const auto& r : d.reasons) {
    if (r.rule == "apology" && r.evidence == "spijt me") found = true;
  }
  CHECK(found);
}

TEST_CASE("matching is case-insensitive and hyphen-insensitive") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  CHECK_FALSE(evaluate_record(with_assistant(
      "Wij bespraken chatgpt in de les over taaltechnologie vandaag."),
      rules).keep);
  CHECK_FALSE(evaluate_record(with_assistant(
      "Het nieuwste GPT4 systeem werd in de krant uitgebreid besproken."),
      rules).keep);
  CHECK_FALSE(evaluate_record(with_assistant(
      "SORRY, maar dit antwoord moest ik tweemaal opnieuw schrijven."),
      rules).keep);
}

TEST_CASE("user turns are not filtered, assistant turns are") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  Conversation c;
  c.id = "u";
  c.turns = {{Role::User, "Wat vind je van ChatGPT?"},
             {Role::Assistant,
              "Daar kan ik weinig over kwijt, maar taaltechnologie in het "
              "algemeen ontwikkelt zich razendsnel de laatste jaren."}};
  FilterDecision d = evaluate_record(c, rules);
  CHECK(d.keep);
}

TEST_CASE("clean Dutch conversation passes every rule") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  FilterDecision d = evaluate_record(
      with_assistant("Een rustige wandeling door het park helpt vaak om "
                     "gedachten te ordenen en nieuwe energie op te doen."),
      rules);
  CHECK(d.keep);
  CHECK(d.reasons.empty());
}

TEST_CASE("preference pairs are checked on prompt, chosen and rejected") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  PreferencePair p;
  p.id = "p";
  p.prompt_nl = "Schrijf een korte samenvatting van dit verhaal voor mij.";
  p.chosen = "Hier is een nette Nederlandse samenvatting van het verhaal, "
             "met aandacht voor de hoofdpersonen en de afloop.";
  p.rejected = "Als AI-model kan ik dit verhaal helaas niet samenvatten.";
  p.chosen_model = "a";
  p.rejected_model = "b";
  FilterDecision d = evaluate_record(p, rules);
  CHECK_FALSE(d.keep);
  REQUIRE_FALSE(d.reasons.empty());
  CHECK(d.reasons.front().field == "rejected");
}

TEST_CASE("run_filter_pass preserves order and reconciles counts") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  std::vector<Conversation> records;
  for (int i = 0; i < 7; ++i) {
    records.push_back(with_assistant(
        "Dit is een keurige Nederlandse zin nummer " + std::to_string(i) +
        " die nergens over struikelt en gewoon wordt gehouden."));
    records.back().id = "keep-" + std::to_string(i);
  }
  for (int i = 0; i < 3; ++i) {
    records.push_back(with_assistant("Sorry, dit gaat niet lukken op nummer " +
                                     std::to_string(i) + "."));
    records.back().id = "drop-" + std::to_string(i);
  }
  std::swap(records[2], records[8]);

  auto result = run_filter_pass(records, rules);
  CHECK(result.report.input == 10);
  CHECK(result.report.kept == 7);
  CHECK(result.report.dropped == 3);
  CHECK(result.report.drops_by_rule.at("apology") == 3);
  CHECK(result.kept.size() + result.report.dropped == records.size());

  // order preserved
  std::vector<std::string> kept_ids;
  for (const auto& r : result.kept) kept_ids.push_back(r.id);
  std::vector<std::string> expected_ids;
  for (const auto& r : records) {
    if (r.id.rfind("keep-", 0) == 0) expected_ids.push_back(r.id);
  }
  CHECK(kept_ids == expected_ids);

  SUBCASE("idempotence: second pass drops nothing") {
    auto again = run_filter_pass(result.kept, rules);
    CHECK(again.report.dropped == 0);
    CHECK(again.kept.size() == result.kept.size());
  }
  SUBCASE("empty input yields zero counters") {
    auto empty = run_filter_pass(std::vector<Conversation>{}, rules);
    CHECK(empty.report.input == 0);
    CHECK(empty.report.kept == 0);
    CHECK(empty.report.dropped == 0);
  }
}

TEST_CASE("monotonicity: adding a banned substring never keeps more") {
  FilterRuleSet rules = FilterRuleSet::defaults();
  std::vector<Conversation> records;
  records.push_back(with_assistant(
      "De oude windmolen aan de rand van het dorp maalt nog elke week graan "
      "voor de plaatselijke bakkerij."));
  records.push_back(with_assistant(
      "Volgende week bespreken we de waterstanden in de polder en het "
      "onderhoud van de gemalen."));
  const std::size_t before = run_filter_pass(records, rules).kept.size();
  rules.banned_substrings.push_back("windmolen");
  const std::size_t after = run_filter_pass(records, rules).kept.size();
  CHECK(after <= before);
  CHECK(after == before - 1);
}

TEST_CASE("rule set round-trips through JSON") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  const auto dir = testutil::scratch_dir("filters_json");
  write_text_file(dir / "rules.json", rules_to_json(rules).dump(2));
  FilterRuleSet back = load_rules(dir / "rules.json");
  CHECK(back.banned_substrings == rules.banned_substrings);
  CHECK(back.apology_substrings == rules.apology_substrings);
  CHECK(back.cutoff_substrings == rules.cutoff_substrings);
  CHECK(back.required_language == rules.required_language);
  CHECK(back.min_language_confidence == rules.min_language_confidence);
  CHECK(back.non_latin_strict == rules.non_latin_strict);
}

TEST_CASE("labeled fixture corpus filters with full agreement") {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  std::ifstream in(testutil::data_dir() / "filter_fixtures.jsonl");
  REQUIRE(in.good());
  std::string line;
  std::size_t clean = 0;
  std::size_t violating = 0;
  std::vector<Conversation> kept_records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    const std::string label = j.at("label").get<std::string>();
    const Conversation conv = conversation_from_json(j.at("conversation"));
    const FilterDecision d = evaluate_record(conv, rules);
    if (label == "keep") {
      ++clean;
      CHECK_MESSAGE(d.keep, conv.id << ": unexpectedly dropped");
      if (d.keep) kept_records.push_back(conv);
    } else {
      ++violating;
      REQUIRE_MESSAGE(!d.keep, conv.id << ": unexpectedly kept");
      CHECK_MESSAGE(d.reasons.front().rule == label,
                    conv.id << ": " << d.reasons.front().rule
                            << " != " << label);
    }
  }
  CHECK(clean == 20);
  CHECK(violating == 40);

  auto second = run_filter_pass(kept_records, rules);
  CHECK(second.report.dropped == 0);
}
