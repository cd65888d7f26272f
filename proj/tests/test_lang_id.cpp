#include <doctest.h>

#include <polder/lang_id.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "support/test_util.hpp"

using namespace polder;

TEST_CASE("clear Dutch and English classify as expected") {
  auto nl = detect_language("De kat zit op de mat en kijkt naar buiten.");
  CHECK(nl.language == "nl");
  CHECK(nl.confidence > 0.5);

  auto en = detect_language(
      "The quick brown fox jumps over the lazy dog and keeps running.");
  CHECK(en.language == "en");
}

TEST_CASE("too-short input is refused") {
  CHECK_THROWS_AS(detect_language("ab"), TextTooShortError);
  CHECK_THROWS_AS(detect_language("12345 67890 !!!"), TextTooShortError);
  // 20+ letters only after ignoring the code block -> still too short
  CHECK_THROWS_AS(detect_language("ok ```een twee drie vier vijf zes zeven```"),
                  TextTooShortError);
}

TEST_CASE("code blocks do not skew detection") {
  auto g = detect_language(
      "De functie hieronder telt de woorden in een zin en geeft het aantal "
      "terug.\n```\nfor word in words: total += 1\nreturn total\n```");
  CHECK(g.language == "nl");
}

TEST_CASE("held-out sample: at least 95 percent accuracy") {
  std::ifstream in(testutil::data_dir() / "lang_heldout.tsv");
  REQUIRE(in.good());
  std::string line;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::map<std::string, std::size_t> per_lang_total;
  std::map<std::string, std::size_t> per_lang_correct;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const std::string expected = line.substr(0, tab);
    const std::string sentence = line.substr(tab + 1);
    ++total;
    ++per_lang_total[expected];
    const LanguageGuess guess = detect_language(sentence);
    if (guess.language == expected) {
      ++correct;
      ++per_lang_correct[expected];
    } else {
      MESSAGE("miss: " << expected << " -> " << guess.language << " | "
                       << sentence);
    }
  }
  REQUIRE(total == 200);
  const double accuracy =
      static_cast<double>(correct) / static_cast<double>(total);
  for (const auto& [lang, n] : per_lang_total) {
    MESSAGE(lang << ": " << per_lang_correct[lang] << "/" << n);
  }
  CHECK(accuracy >= 0.95);
}

TEST_CASE("margin separates close languages on clear text") {
  auto g = detect_language(
      "Wij gaan morgen met de hele familie naar het strand en nemen "
      "boterhammen, fruit en een grote parasol mee voor de kinderen.");
  CHECK(g.language == "nl");
  CHECK(g.confidence > 0.5);
  CHECK(g.margin > 0.1);
}

TEST_CASE("detector with a single profile still answers") {
  LanguageDetector d({{"nl", std::string(lang_corpus::kDutch)}});
  auto g = d.detect("De zon schijnt vandaag volop boven het dorp.");
  CHECK(g.language == "nl");
}
