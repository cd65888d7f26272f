#include "polder/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>

#include <stdexcept>

namespace polder::text {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || n == nullptr) {
    throw std::runtime_error("ICU NFC instance unavailable");
  }
  return *n;
}

bool is_unicode_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

}  // namespace

std::string normalize_nfc(std::string_view utf8) {
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(in, ec);
  if (U_FAILURE(ec)) {
    throw std::runtime_error("NFC normalization failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::string to_lower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    DecodedChar d = decode_utf8(utf8, i);
    out += encode_utf8(static_cast<char32_t>(u_tolower(static_cast<UChar32>(d.cp))));
    i += d.width;
  }
  return out;
}

std::string trim(std::string_view utf8) {
  std::size_t begin = 0;
  while (begin < utf8.size()) {
    DecodedChar d = decode_utf8(utf8, begin);
    if (!is_unicode_space(d.cp)) break;
    begin += d.width;
  }
  // Scan forward tracking the end of the last non-space codepoint.
  std::size_t end = begin;
  std::size_t i = begin;
  while (i < utf8.size()) {
    DecodedChar d = decode_utf8(utf8, i);
    i += d.width;
    if (!is_unicode_space(d.cp)) end = i;
  }
  return std::string(utf8.substr(begin, end - begin));
}

std::string collapse_whitespace(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  bool in_space = false;
  std::size_t i = 0;
  while (i < utf8.size()) {
    DecodedChar d = decode_utf8(utf8, i);
    if (is_unicode_space(d.cp)) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out += ' ';
      in_space = false;
      out.append(utf8.substr(i, d.width));
    }
    i += d.width;
  }
  return out;
}

bool is_blank(std::string_view utf8) {
  std::size_t i = 0;
  while (i < utf8.size()) {
    DecodedChar d = decode_utf8(utf8, i);
    if (!is_unicode_space(d.cp)) return false;
    i += d.width;
  }
  return true;
}

std::size_t count_letters(std::string_view utf8) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < utf8.size()) {
    DecodedChar d = decode_utf8(utf8, i);
    if (u_isalpha(static_cast<UChar32>(d.cp))) ++n;
    i += d.width;
  }
  return n;
}

std::string strip_code_blocks(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  bool in_fence = false;
  bool in_inline = false;
  while (i < utf8.size()) {
    if (utf8.compare(i, 3, "```") == 0) {
      in_fence = !in_fence;
      i += 3;
      continue;
    }
    if (!in_fence && utf8[i] == '`') {
      in_inline = !in_inline;
      ++i;
      continue;
    }
    if (!in_fence && !in_inline) out += utf8[i];
    ++i;
  }
  return out;
}

CharClass classify_char(char32_t cp) {
  const UChar32 c = static_cast<UChar32>(cp);
  const int8_t cat = u_charType(c);
  if (u_isUWhiteSpace(c)) return CharClass::Whitespace;
  if (cat == U_NON_SPACING_MARK || cat == U_ENCLOSING_MARK ||
      cat == U_COMBINING_SPACING_MARK) {
    return CharClass::CombiningMark;
  }
  if (u_isdigit(c)) return CharClass::Digit;
  if (u_isalpha(c)) {
    UErrorCode ec = U_ZERO_ERROR;
    UScriptCode script = uscript_getScript(c, &ec);
    if (U_FAILURE(ec)) return CharClass::Other;
    if (script == USCRIPT_LATIN || script == USCRIPT_COMMON ||
        script == USCRIPT_INHERITED) {
      return CharClass::LatinLetter;
    }
    return CharClass::OtherLetter;
  }
  if (cat == U_MATH_SYMBOL || cat == U_CURRENCY_SYMBOL ||
      cat == U_MODIFIER_SYMBOL || cat == U_OTHER_SYMBOL) {
    return CharClass::EmojiOrSymbol;
  }
  if (cat == U_DASH_PUNCTUATION || cat == U_START_PUNCTUATION ||
      cat == U_END_PUNCTUATION || cat == U_CONNECTOR_PUNCTUATION ||
      cat == U_OTHER_PUNCTUATION || cat == U_INITIAL_PUNCTUATION ||
      cat == U_FINAL_PUNCTUATION) {
    return CharClass::Punctuation;
  }
  return CharClass::Other;
}

DecodedChar decode_utf8(std::string_view utf8, std::size_t i) {
  if (i >= utf8.size()) return {0, 0};
  const auto byte = [&](std::size_t k) -> std::uint8_t {
    return static_cast<std::uint8_t>(utf8[k]);
  };
  const std::uint8_t b0 = byte(i);
  if (b0 < 0x80) return {b0, 1};

  auto cont = [&](std::size_t k) {
    return k < utf8.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
    if (cp >= 0x80) return {cp, 2};
  } else if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    char32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) |
                  (byte(i + 2) & 0x3Fu);
    if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) return {cp, 3};
  } else if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                  ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
    if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
  }
  return {0xFFFD, 1};
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace polder::text
