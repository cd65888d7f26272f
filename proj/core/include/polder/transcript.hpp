#pragma once

#include <stdexcept>
#include <string>

#include "polder/records.hpp"

namespace polder {

// Model output from the self-chat flow, before parsing.
struct RawTranscript {
  std::string text;
  std::string seed_id;
  std::string persona_name;
};

class TranscriptError : public std::runtime_error {
 public:
  enum class Kind {
    NoTurnsFound,
    FirstRoleNotUser,
    AlternationBroken,
    EmptyTurn,
    SystemTurnUnsupported,
  };

  TranscriptError(Kind kind, std::size_t index, const std::string& what)
      : std::runtime_error(what), kind_(kind), index_(index) {}
  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

class RatingError : public std::runtime_error {
 public:
  enum class Kind { NotFound, OutOfRange };

  RatingError(Kind kind, int value, const std::string& what)
      : std::runtime_error(what), kind_(kind), value_(value) {}
  Kind kind() const { return kind_; }
  int value() const { return value_; }

 private:
  Kind kind_;
  int value_;
};

// Splits on "gebruiker:"/"assistent:" marker lines (case-insensitive,
// tolerating leading whitespace and markdown adornments around the marker)
// after stripping an optional surrounding code fence. Multi-line bodies
// attach to the preceding marker. The result always passes
// validate_conversation.
Conversation parse_transcript(const RawTranscript& raw);

// Inverse of parse_transcript for system-free conversations:
// "gebruiker: ..." / "assistent: ..." blocks separated by blank lines.
std::string render_transcript(const Conversation& conv);

// Number of user turns; the self-chat prompt asks for 5..12.
std::size_t user_turn_count(const Conversation& conv);

inline constexpr std::size_t kMinSelfChatTurns = 5;
inline constexpr std::size_t kMaxSelfChatTurns = 12;

// First "<rating>k</rating>" occurrence, whitespace-tolerant inside the
// tags; k must lie in 1..5.
int extract_rating(const std::string& text);

}  // namespace polder
