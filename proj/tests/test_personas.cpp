#include <doctest.h>

#include <polder/jsonl.hpp>
#include <polder/personas.hpp>

#include <cmath>
#include <map>

#include "support/test_util.hpp"

using namespace polder;

TEST_CASE("builtin table has the nine personas with exact probabilities") {
  const PersonaTable& t = builtin_table();
  REQUIRE(t.personas.size() == 9);

  const std::map<std::string, double> expected = {
      {"taalleerder", 0.01}, {"direct", 0.1},   {"detailliefhebber", 0.1},
      {"kritisch", 0.03},    {"kind", 0.01},    {"expert", 0.15},
      {"lachebek", 0.01},    {"generalist", 0.15}, {"gemiddeld", 0.44},
  };
  double sum = 0.0;
  for (const auto& [name, prob] : expected) {
    const Persona* p = t.find(name);
    REQUIRE_MESSAGE(p != nullptr, name);
    CHECK(p->probability == prob);
    CHECK_FALSE(p->description_nl.empty());
    sum += p->probability;
  }
  CHECK(std::abs(sum - 1.0) <= 1e-12);
  CHECK(t.find("gemiddeld")->probability == 0.44);
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("descriptions are the Dutch originals") {
  const PersonaTable& t = builtin_table();
  CHECK(t.find("gemiddeld")->description_nl ==
        "Een gemiddelde, normale gebruiker die geen bijzonder eisen stelt of "
        "noden heeft maar simpelweg een behulpzame assistent verwacht.");
  CHECK(t.find("kritisch")->description_nl ==
        "Een kritisch persoon die alles in vraag stelt en vaak moeilijk te "
        "overtuigen is.");
  CHECK(t.find("lachebek")->description_nl.find("smileys en andere emoticons") !=
        std::string::npos);
}

TEST_CASE("degenerate table always yields its single persona") {
  PersonaTable t;
  t.personas = {{"gemiddeld", 1.0, "beschrijving"}};
  std::mt19937_64 rng(123);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_persona(t, rng).name == "gemiddeld");
  }
}

TEST_CASE("identical seeds give identical draw sequences") {
  const PersonaTable& t = builtin_table();
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    CHECK(sample_persona(t, a).name == sample_persona(t, b).name);
  }
}

TEST_CASE("invalid tables are rejected") {
  PersonaTable t;
  t.personas = {{"a", 0.5, "x"}, {"b", 0.4, "y"}};  // sums to 0.9
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(sample_persona(t, rng), InvalidTableError);

  PersonaTable dup;
  dup.personas = {{"a", 0.5, "x"}, {"a", 0.5, "y"}};
  CHECK_THROWS_AS(dup.validate(), InvalidTableError);
}

TEST_CASE("empirical frequencies match probabilities at 1e6 draws") {
  const PersonaTable& t = builtin_table();
  std::mt19937_64 rng(2024);
  std::map<std::string, std::size_t> counts;
  const std::size_t n = 1'000'000;
  for (std::size_t i = 0; i < n; ++i) {
    ++counts[sample_persona(t, rng).name];
  }
  for (const Persona& p : t.personas) {
    const double freq =
        static_cast<double>(counts[p.name]) / static_cast<double>(n);
    CHECK_MESSAGE(std::abs(freq - p.probability) <= 0.005,
                  p.name << " freq=" << freq);
  }
}

TEST_CASE("persona table override file is validated") {
  const auto dir = testutil::scratch_dir("personas");
  polder::write_text_file(
      dir / "table.json",
      R"([{"name":"kort","probability":0.25,"description_nl":"Kort van stof."},)"
      R"({"name":"lang","probability":0.75,"description_nl":"Praat honderduit."}])");
  PersonaTable t = load_persona_table(dir / "table.json");
  CHECK(t.personas.size() == 2);
  CHECK(t.personas[0].name == "kort");

  polder::write_text_file(dir / "bad.json",
                          R"([{"name":"x","probability":0.5,"description_nl":"y"}])");
  CHECK_THROWS_AS(load_persona_table(dir / "bad.json"), InvalidTableError);
}
