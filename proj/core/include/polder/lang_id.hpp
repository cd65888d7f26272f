#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polder {

class TextTooShortError : public std::runtime_error {
 public:
  explicit TextTooShortError(const std::string& what)
      : std::runtime_error(what) {}
};

struct LanguageGuess {
  std::string language;
  double confidence = 0.0;  // in [0,1]
  // Relative distance lead of the runner-up profile,
  // (d_second - d_best) / d_second in [0,1). Scale-free, so short and long
  // texts gate on the same threshold.
  double margin = 0.0;
};

// Character n-gram profile ranking (out-of-place distance over the top
// ranked 1..3-grams). Profiles are built once from the corpora embedded in
// the library, so behavior is fixed at build time.
class LanguageDetector {
 public:
  // corpora: (language code, training text) pairs.
  explicit LanguageDetector(
      const std::vector<std::pair<std::string, std::string>>& corpora);

  // Built-in profiles: nl, en, de, fr.
  static const LanguageDetector& builtin();

  // Requires at least 20 letters after stripping code blocks; throws
  // TextTooShortError otherwise.
  LanguageGuess detect(std::string_view text) const;

  static constexpr std::size_t kMinLetters = 20;
  static constexpr std::size_t kProfileSize = 1000;

 private:
  struct Profile {
    std::string code;
    std::unordered_map<std::string, std::size_t> rank;
  };
  std::vector<Profile> profiles_;
};

// Convenience wrapper over the built-in detector.
LanguageGuess detect_language(std::string_view text);

namespace lang_corpus {
// Embedded training text, one constant per supported language.
extern const std::string_view kDutch;
extern const std::string_view kEnglish;
extern const std::string_view kGerman;
extern const std::string_view kFrench;
}  // namespace lang_corpus

}  // namespace polder
