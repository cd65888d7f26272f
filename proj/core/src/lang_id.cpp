#include "polder/lang_id.hpp"

#include <unicode/uchar.h>

#include <algorithm>
#include <map>

#include "polder/text.hpp"

namespace polder {

namespace {

// Words as lowercase codepoint sequences, padded with '_' on both sides in
// the classic Cavnar–Trenkle fashion.
std::vector<std::vector<char32_t>> tokenize_words(std::string_view utf8) {
  std::vector<std::vector<char32_t>> words;
  std::vector<char32_t> current;
  std::size_t i = 0;
  while (i <= utf8.size()) {
    text::DecodedChar d = i < utf8.size() ? text::decode_utf8(utf8, i)
                                          : text::DecodedChar{0, 1};
    const bool letter =
        i < utf8.size() && u_isalpha(static_cast<UChar32>(d.cp));
    if (letter) {
      if (current.empty()) current.push_back(U'_');
      current.push_back(
          static_cast<char32_t>(u_tolower(static_cast<UChar32>(d.cp))));
    } else if (!current.empty()) {
      current.push_back(U'_');
      words.push_back(std::move(current));
      current.clear();
    }
    i += i < utf8.size() ? d.width : 1;
  }
  return words;
}

std::unordered_map<std::string, std::size_t> count_ngrams(
    std::string_view utf8) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& word : tokenize_words(utf8)) {
    for (std::size_t n = 1; n <= 3; ++n) {
      if (word.size() < n) continue;
      for (std::size_t i = 0; i + n <= word.size(); ++i) {
        std::string gram;
        for (std::size_t k = 0; k < n; ++k) {
          gram += text::encode_utf8(word[i + k]);
        }
        ++counts[gram];
      }
    }
  }
  return counts;
}

// Top-K n-grams by frequency; ties broken lexicographically so the
// profile is identical on every platform.
std::vector<std::string> ranked_ngrams(std::string_view utf8,
                                       std::size_t top_k) {
  auto counts = count_ngrams(utf8);
  std::vector<std::pair<std::string, std::size_t>> items(counts.begin(),
                                                         counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() > top_k) items.resize(top_k);
  std::vector<std::string> out;
  out.reserve(items.size());
  for (auto& [gram, count] : items) out.push_back(std::move(gram));
  return out;
}

}  // namespace

LanguageDetector::LanguageDetector(
    const std::vector<std::pair<std::string, std::string>>& corpora) {
  for (const auto& [code, corpus] : corpora) {
    Profile p;
    p.code = code;
    std::vector<std::string> ranked = ranked_ngrams(corpus, kProfileSize);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      p.rank.emplace(std::move(ranked[i]), i);
    }
    profiles_.push_back(std::move(p));
  }
}

const LanguageDetector& LanguageDetector::builtin() {
  static const LanguageDetector detector({
      {"nl", std::string(lang_corpus::kDutch)},
      {"en", std::string(lang_corpus::kEnglish)},
      {"de", std::string(lang_corpus::kGerman)},
      {"fr", std::string(lang_corpus::kFrench)},
  });
  return detector;
}

LanguageGuess LanguageDetector::detect(std::string_view raw_text) const {
  const std::string stripped = text::strip_code_blocks(raw_text);
  if (text::count_letters(stripped) < kMinLetters) {
    throw TextTooShortError("need at least " + std::to_string(kMinLetters) +
                            " letters to identify a language");
  }

  const std::vector<std::string> doc = ranked_ngrams(stripped, kProfileSize);
  // Out-of-place distance, normalized to [0,1] by the worst case where
  // every document n-gram is missing from the profile.
  std::map<double, const Profile*> by_distance;
  for (const Profile& p : profiles_) {
    std::size_t distance = 0;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      auto it = p.rank.find(doc[i]);
      if (it == p.rank.end()) {
        distance += kProfileSize;
      } else {
        distance += i > it->second ? i - it->second : it->second - i;
      }
    }
    const double norm = static_cast<double>(kProfileSize) *
                        static_cast<double>(doc.size());
    by_distance.emplace(static_cast<double>(distance) / norm, &p);
  }

  auto best = by_distance.begin();
  LanguageGuess guess;
  guess.language = best->second->code;
  guess.confidence = 1.0 - best->first;
  if (by_distance.size() > 1) {
    auto runner_up = std::next(best);
    guess.margin = runner_up->first > 0.0
                       ? (runner_up->first - best->first) / runner_up->first
                       : 0.0;
  } else {
    guess.margin = guess.confidence;
  }
  return guess;
}

LanguageGuess detect_language(std::string_view text) {
  return LanguageDetector::builtin().detect(text);
}

}  // namespace polder
