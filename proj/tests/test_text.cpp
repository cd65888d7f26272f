#include <doctest.h>

#include <polder/text.hpp>

using namespace polder;

TEST_CASE("NFC composes decomposed Latin sequences") {
  // e + COMBINING ACUTE ACCENT -> precomposed é
  CHECK(text::normalize_nfc("é") == "é");
  CHECK(text::normalize_nfc("ideën") == "ideën");  // ideën
  CHECK(text::normalize_nfc("é") == "é");
  CHECK(text::normalize_nfc("plain ascii") == "plain ascii");
}

TEST_CASE("NFC is idempotent") {
  const std::string samples[] = {"ȩ́", "Héél goed, ça va", "中文",
                                 "åb"};
  for (const std::string& s : samples) {
    const std::string once = text::normalize_nfc(s);
    CHECK(text::normalize_nfc(once) == once);
  }
}

TEST_CASE("trim and collapse handle unicode whitespace") {
  CHECK(text::trim("  hoi  ") == "hoi");
  CHECK(text::trim(" hoi ") == "hoi");  // NBSP
  CHECK(text::trim("") == "");
  CHECK(text::trim(" \n\t ") == "");
  CHECK(text::collapse_whitespace("a  b\t\nc") == "a b c");
  CHECK(text::collapse_whitespace("  a  ") == "a");
  CHECK(text::is_blank("  \n"));
  CHECK_FALSE(text::is_blank(" x "));
}

TEST_CASE("char classification") {
  CHECK(text::classify_char(U'a') == text::CharClass::LatinLetter);
  CHECK(text::classify_char(U'é') == text::CharClass::LatinLetter);
  CHECK(text::classify_char(U'ç') == text::CharClass::LatinLetter);
  CHECK(text::classify_char(U'中') == text::CharClass::OtherLetter);
  CHECK(text::classify_char(U'д') == text::CharClass::OtherLetter);
  CHECK(text::classify_char(U'7') == text::CharClass::Digit);
  CHECK(text::classify_char(U' ') == text::CharClass::Whitespace);
  CHECK(text::classify_char(U'!') == text::CharClass::Punctuation);
  CHECK(text::classify_char(U'😀') == text::CharClass::EmojiOrSymbol);
  CHECK(text::classify_char(0x0301) == text::CharClass::CombiningMark);
}

TEST_CASE("strip_code_blocks removes fenced and inline code") {
  CHECK(text::strip_code_blocks("voor ```code hier``` na") == "voor  na");
  CHECK(text::strip_code_blocks("som `x = 1` klaar") == "som  klaar");
  CHECK(text::strip_code_blocks("geen code") == "geen code");
}

TEST_CASE("count_letters counts letters only") {
  CHECK(text::count_letters("abc 123 !") == 3);
  CHECK(text::count_letters("héél") == 4);
  CHECK(text::count_letters("") == 0);
}

TEST_CASE("utf8 decode round-trips") {
  const std::string samples[] = {"a", "é", "中", "😀"};
  for (const std::string& s : samples) {
    auto d = text::decode_utf8(s, 0);
    CHECK(d.width == s.size());
    CHECK(text::encode_utf8(d.cp) == s);
  }
  // Invalid byte decodes as replacement char, width 1.
  auto bad = text::decode_utf8("\xFF", 0);
  CHECK(bad.cp == 0xFFFD);
  CHECK(bad.width == 1);
}

TEST_CASE("hashes are stable") {
  CHECK(text::fnv1a64("") == 0xCBF29CE484222325ull);
  CHECK(text::fnv1a64("a") != text::fnv1a64("b"));
  CHECK(text::mix64(1) != text::mix64(2));
}
