#include <doctest.h>

#include <polder/prompts.hpp>

#include "support/test_util.hpp"

using namespace polder;

namespace {

SeedPrompt seed(const std::string& text) {
  SeedPrompt s;
  s.id = "s1";
  s.user_en = text;
  s.source = "demo";
  return s;
}

}  // namespace

TEST_CASE("generation prompt substitutes persona and subject") {
  const Persona& gemiddeld = *builtin_table().find("gemiddeld");
  ChatRequest req = render_generation_prompt(gemiddeld, seed("Explain photosynthesis"));

  REQUIRE(req.messages.size() == 1);
  CHECK(req.messages[0].role == Role::User);
  CHECK(req.purpose == Purpose::Generate);
  const std::string& body = req.messages[0].content;
  CHECK(body.find("<startvraag>\nExplain photosynthesis\n</startvraag>") !=
        std::string::npos);
  CHECK(body.find("<persona>\n" + gemiddeld.description_nl + "\n</persona>") !=
        std::string::npos);
  CHECK(body.find("tussen de 5 en 12 beurten") != std::string::npos);
  CHECK(body.find("{persona}") == std::string::npos);
  CHECK(body.find("{subject}") == std::string::npos);
}

TEST_CASE("renderers are pure functions") {
  const Persona& p = *builtin_table().find("expert");
  CHECK(render_generation_prompt(p, seed("Q")) ==
        render_generation_prompt(p, seed("Q")));
  CHECK(render_translation_request("Write a haiku") ==
        render_translation_request("Write a haiku"));
  CHECK(render_answer_request(std::nullopt, "Hoi") ==
        render_answer_request(std::nullopt, "Hoi"));
}

TEST_CASE("rating prompt carries question, options and format example") {
  ChatRequest req = render_rating_prompt("Leg breuken uit.", "Zo dus.",
                                         criterion(CriterionKey::Dutchness));
  REQUIRE(req.messages.size() == 1);
  CHECK(req.purpose == Purpose::Judge);
  CHECK(req.temperature == 0.0);
  const std::string& body = req.messages[0].content;
  CHECK(body.find("Criteria: Is de reactie in vlot en gramaticaal correct "
                  "Nederlands geschreven?") != std::string::npos);
  CHECK(body.find("<rating>3</rating>") != std::string::npos);
  CHECK(body.find("<rating>[1-5]</rating>") != std::string::npos);
  CHECK(body.find("Instructie:\nLeg breuken uit.") != std::string::npos);
  CHECK(body.find("Reactie:\nZo dus.") != std::string::npos);
}

TEST_CASE("helpfulness option 5 text matches the rubric") {
  ChatRequest req = render_rating_prompt("p", "r",
                                         criterion(CriterionKey::Helpfulness));
  CHECK(req.messages[0].content.find(
            "- 5: De reactie biedt briljante ideeen die de taak nauwkeurig "
            "aanpakken.") != std::string::npos);
}

TEST_CASE("options render ascending, one line each") {
  ChatRequest req = render_rating_prompt("p", "r",
                                         criterion(CriterionKey::Conciseness));
  const std::string& body = req.messages[0].content;
  const auto p1 = body.find("- 1: ");
  const auto p2 = body.find("- 2: ");
  const auto p5 = body.find("- 5: ");
  REQUIRE(p1 != std::string::npos);
  REQUIRE(p5 != std::string::npos);
  CHECK(p1 < p2);
  CHECK(p2 < p5);
}

TEST_CASE("translation request passes text through as user message") {
  ChatRequest req = render_translation_request("Write a haiku");
  REQUIRE(req.messages.size() == 2);
  CHECK(req.messages[0].role == Role::System);
  CHECK(req.messages[1].role == Role::User);
  CHECK(req.messages[1].content == "Write a haiku");
  CHECK(req.purpose == Purpose::Translate);

  SUBCASE("code preservation instruction present") {
    ChatRequest code = render_translation_request("```py\nx=1\n```");
    CHECK(code.messages[0].content.find("codeblokken") != std::string::npos);
  }
  SUBCASE("register hint lands in the system message") {
    ChatRequest hinted = render_translation_request("Hello", "informeel");
    CHECK(hinted.messages[0].content.find("Schrijfstijl: informeel") !=
          std::string::npos);
  }
  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(render_translation_request("  "), TemplateError);
  }
}

TEST_CASE("answer request orders system before user") {
  ChatRequest plain = render_answer_request(std::nullopt, "Vat samen: tekst");
  REQUIRE(plain.messages.size() == 1);
  CHECK(plain.messages[0].role == Role::User);

  ChatRequest with_system = render_answer_request("Je bent een piraat", "Hallo");
  REQUIRE(with_system.messages.size() == 2);
  CHECK(with_system.messages[0].role == Role::System);
  CHECK(with_system.messages[0].content == "Je bent een piraat");
  CHECK(with_system.messages[1].role == Role::User);
  CHECK(with_system.purpose == Purpose::Answer);
}

TEST_CASE("no vocabulary placeholder survives rendering") {
  static const char* tokens[] = {"{persona}", "{subject}", "{prompt}",
                                 "{response}", "{criterion_question}",
                                 "{criterion_options}", "{{min_score}}",
                                 "{{max_score}}"};
  const Persona& p = *builtin_table().find("kind");
  const std::string generation =
      render_generation_prompt(p, seed("A question")).messages[0].content;
  const std::string rating =
      render_rating_prompt("vraag", "antwoord",
                           criterion(CriterionKey::Dutchness))
          .messages[0]
          .content;
  for (const char* token : tokens) {
    CHECK(generation.find(token) == std::string::npos);
    CHECK(rating.find(token) == std::string::npos);
  }
}

TEST_CASE("rendered prompts match the stored golden files") {
  const Persona& gemiddeld = *builtin_table().find("gemiddeld");
  CHECK(render_generation_prompt(gemiddeld, seed("Explain photosynthesis"))
            .messages[0]
            .content == testutil::golden("generation_prompt.txt"));
  CHECK(render_rating_prompt("Leg uit hoe fotosynthese werkt.",
                             "Planten zetten licht om in energie.",
                             criterion(CriterionKey::Dutchness))
            .messages[0]
            .content == testutil::golden("rating_prompt_dutchness.txt"));
  CHECK(std::string(templates::kTranslationSystem) ==
        testutil::golden("translation_system.txt"));
}

TEST_CASE("golden files match their recorded hashes") {
  const std::string recorded = testutil::golden("goldens.sha256");
  REQUIRE_FALSE(recorded.empty());
  std::istringstream in(recorded);
  std::string hash, name;
  std::size_t checked = 0;
  while (in >> hash >> name) {
    const std::string bytes = testutil::golden(name);
    CHECK_MESSAGE(testutil::sha256_hex(bytes) == hash, name);
    ++checked;
  }
  CHECK(checked >= 7);
}
