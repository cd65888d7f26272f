#include "polder/prompts.hpp"

#include <sstream>

#include "polder/text.hpp"

namespace polder {

namespace {

void replace_all(std::string& haystack, std::string_view needle,
                 std::string_view value) {
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    haystack.replace(pos, needle.size(), value);
    pos += value.size();
  }
}

// Substitutes placeholders and confirms none of the template's own tokens
// were left without a value. Values are never rescanned, so content that
// happens to contain "{subject}" is not expanded.
std::string render_template(
    std::string_view tmpl,
    const std::vector<std::pair<std::string_view, std::string_view>>& subs) {
  std::string out(tmpl);
  for (const auto& [token, value] : subs) {
    replace_all(out, token, value);
  }
  static constexpr std::string_view kVocabulary[] = {
      "{persona}",       "{subject}",           "{prompt}",
      "{response}",      "{criterion_question}", "{criterion_options}",
      "{{min_score}}",   "{{max_score}}",       "{score}",
      "{beschrijving}",
  };
  for (std::string_view token : kVocabulary) {
    bool provided = false;
    for (const auto& [sub_token, value] : subs) {
      if (sub_token == token) provided = true;
    }
    if (!provided && tmpl.find(token) != std::string_view::npos) {
      throw TemplateError("unsubstituted placeholder: " + std::string(token));
    }
  }
  return out;
}

}  // namespace

std::string_view purpose_name(Purpose p) {
  switch (p) {
    case Purpose::Generate: return "generate";
    case Purpose::Translate: return "translate";
    case Purpose::Answer: return "answer";
    case Purpose::Judge: return "judge";
  }
  return "generate";
}

std::string_view criterion_name(CriterionKey key) {
  switch (key) {
    case CriterionKey::Dutchness: return "dutchness";
    case CriterionKey::Helpfulness: return "helpfulness";
    case CriterionKey::Conciseness: return "conciseness";
  }
  return "dutchness";
}

const std::vector<Criterion>& builtin_criteria() {
  static const std::vector<Criterion> criteria = {
      {CriterionKey::Dutchness,
       "Is de reactie in vlot en gramaticaal correct Nederlands geschreven? "
       "Negeer code-fragmenten in je analyse en richt je enkel op de "
       "doorlopende tekst. Leenwoorden uit andere talen mogen gebruikt "
       "worden als dat gewoonlijk is in het domein (bv. bij software). Een "
       "hogere score duidt op beter Nederlands taalgebruik.",
       {{1,
         "De reactie is onleesbaar, bevat veel grammaticale fouten, of is "
         "in slecht Nederlands geschreven."},
        {2,
         "De reactie is moeilijk te begrijpen of bevat veel grammaticale "
         "fouten."},
        {3,
         "De reactie is begrijpelijk maar bevat enkele grammaticale "
         "fouten."},
        {4,
         "De reactie is goed geschreven en bevat weinig grammaticale "
         "fouten."},
        {5,
         "De reactie is uitstekend geschreven, vlot leesbaar en bevat geen "
         "grammaticale fouten."}}},
      {CriterionKey::Helpfulness,
       "Is de reactie relevant en behulpzaam? Beantwoordt het model de "
       "instructie goed? Een hogere score duidt op een relevantere en "
       "behulpzamere reactie.",
       {{1,
         "De reactie is helemaal niet relevant of heeft aanzienlijke "
         "afwijkingen."},
        {2,
         "De reactie is slechts enigszins relevant maar is niet concreet."},
        {3,
         "De reactie is min of meer relevant en geeft een relevant "
         "antwoord."},
        {4, "De reactie is grotendeels relevant en lijkt zeer nuttig."},
        {5,
         "De reactie biedt briljante ideeen die de taak nauwkeurig "
         "aanpakken."}}},
      {CriterionKey::Conciseness,
       "Is de reactie beknopt en ter zake, zonder onnodige herhaling of "
       "uitweiding? Een hogere score duidt op een beknoptere, duidelijkere "
       "reactie.",
       {{1,
         "De reactie bevat overmatige herhaling of onnodige uitweiding."},
        {2, "De reactie is nogal omslachtig."},
        {3,
         "De reactie is redelijk beknopt met minimaal onnodige inhoud."},
        {4,
         "De reactie is beknopt en ter zake, met minimaal onnodige "
         "inhoud."},
        {5,
         "De reactie is uitzonderlijk positief beknopt, verstrekt "
         "informatie efficient."}}},
  };
  return criteria;
}

const Criterion& criterion(CriterionKey key) {
  for (const Criterion& c : builtin_criteria()) {
    if (c.key == key) return c;
  }
  throw TemplateError("unknown criterion");
}

ChatRequest render_generation_prompt(const Persona& persona,
                                     const SeedPrompt& seed) {
  std::string body = render_template(
      templates::kGeneration,
      {{"{persona}", persona.description_nl}, {"{subject}", seed.user_en}});
  ChatRequest req;
  req.messages = {{Role::User, std::move(body)}};
  req.temperature = 1.0;
  req.max_tokens = 4096;
  req.purpose = Purpose::Generate;
  return req;
}

ChatRequest render_rating_prompt(const std::string& prompt_nl,
                                 const std::string& response,
                                 const Criterion& crit) {
  if (crit.options.size() != 5 || crit.options.begin()->first != 1 ||
      crit.options.rbegin()->first != 5) {
    throw TemplateError("criterion options must cover scores 1..5");
  }
  std::ostringstream options;
  bool first = true;
  for (const auto& [score, description] : crit.options) {
    if (!first) options << '\n';
    first = false;
    std::string line = render_template(
        templates::kRatingOption,
        {{"{score}", std::to_string(score)}, {"{beschrijving}", description}});
    options << line;
  }
  const std::string options_block = options.str();
  std::string body =
      render_template(templates::kRating,
                      {{"{{min_score}}", "1"},
                       {"{{max_score}}", "5"},
                       {"{prompt}", prompt_nl},
                       {"{response}", response},
                       {"{criterion_question}", crit.question_nl},
                       {"{criterion_options}", options_block}});
  ChatRequest req;
  req.messages = {{Role::User, std::move(body)}};
  req.temperature = 0.0;
  req.max_tokens = 64;
  req.purpose = Purpose::Judge;
  return req;
}

ChatRequest render_translation_request(
    const std::string& text_en, const std::optional<std::string>& register_hint) {
  if (text::is_blank(text_en)) {
    throw TemplateError("translation input is empty");
  }
  std::string system(templates::kTranslationSystem);
  if (register_hint && !register_hint->empty()) {
    system += "\n\nSchrijfstijl: " + *register_hint;
  }
  ChatRequest req;
  req.messages = {{Role::System, std::move(system)}, {Role::User, text_en}};
  req.temperature = 0.0;
  req.max_tokens = 2048;
  req.purpose = Purpose::Translate;
  return req;
}

ChatRequest render_answer_request(const std::optional<std::string>& system_nl,
                                  const std::string& user_nl) {
  ChatRequest req;
  if (system_nl && !system_nl->empty()) {
    req.messages.push_back({Role::System, *system_nl});
  }
  req.messages.push_back({Role::User, user_nl});
  req.temperature = 1.0;
  req.max_tokens = 2048;
  req.purpose = Purpose::Answer;
  return req;
}

}  // namespace polder
