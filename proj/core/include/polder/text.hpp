#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polder::text {

// Canonical composition (NFC). All record text is normalized with this on
// load so filter matching and dedup keys are stable.
std::string normalize_nfc(std::string_view utf8);

// Per-codepoint simple lowercase mapping (locale independent).
std::string to_lower(std::string_view utf8);

// Strips leading/trailing Unicode whitespace.
std::string trim(std::string_view utf8);

// Collapses runs of Unicode whitespace to a single ASCII space and trims.
std::string collapse_whitespace(std::string_view utf8);

bool is_blank(std::string_view utf8);

// Number of codepoints classified as letters.
std::size_t count_letters(std::string_view utf8);

// Removes ``` fenced blocks and `inline` spans, so code does not skew
// language identification.
std::string strip_code_blocks(std::string_view utf8);

enum class CharClass {
  LatinLetter,      // Latin-script letter, any diacritics
  OtherLetter,      // letter from a non-Latin script
  CombiningMark,
  Digit,
  Whitespace,
  EmojiOrSymbol,    // symbols, emoticons, pictographs, dingbats
  Punctuation,
  Other,
};

CharClass classify_char(char32_t cp);

struct DecodedChar {
  char32_t cp = 0;
  std::size_t width = 0;  // bytes consumed; 0 at end of input
};

// Decodes one codepoint at byte offset `i`. Invalid sequences decode as
// U+FFFD with width 1.
DecodedChar decode_utf8(std::string_view utf8, std::size_t i);

std::string encode_utf8(char32_t cp);

// FNV-1a over raw bytes; the pipeline's stable content hash.
std::uint64_t fnv1a64(std::string_view bytes);

// splitmix64 finalizer, used to derive per-record RNG seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace polder::text
