#include "polder/transcript.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "polder/text.hpp"

namespace polder {

namespace {

bool is_adornment(char c) { return c == '*' || c == '_' || c == '#'; }

bool iequals_at(std::string_view line, std::size_t pos, std::string_view word) {
  if (pos + word.size() > line.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[pos + i])) != word[i]) {
      return false;
    }
  }
  return true;
}

// Matches "[ws][adorn]gebruiker[adorn][ws]:[adorn][ws]" at line start and
// returns the role plus the offset where content begins.
struct MarkerMatch {
  bool matched = false;
  Role role = Role::User;
  std::size_t content_begin = 0;
};

MarkerMatch match_marker(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() &&
         std::isspace(static_cast<unsigned char>(line[i]))) {
    ++i;
  }
  while (i < line.size() && is_adornment(line[i])) ++i;

  Role role;
  if (iequals_at(line, i, "gebruiker")) {
    role = Role::User;
    i += 9;
  } else if (iequals_at(line, i, "assistent")) {
    role = Role::Assistant;
    i += 9;
  } else {
    return {};
  }

  while (i < line.size() && is_adornment(line[i])) ++i;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i >= line.size() || line[i] != ':') return {};
  ++i;
  while (i < line.size() && is_adornment(line[i])) ++i;
  if (i < line.size() && line[i] == ' ') ++i;
  return {true, role, i};
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// Removes one fence pair that wraps the whole payload, if present.
std::string strip_surrounding_fence(const std::string& s) {
  std::string t = text::trim(s);
  if (t.size() < 6 || t.compare(0, 3, "```") != 0) return t;
  std::size_t first_nl = t.find('\n');
  if (first_nl == std::string::npos) return t;
  if (t.compare(t.size() - 3, 3, "```") != 0) return t;
  std::size_t last_nl = t.rfind('\n', t.size() - 4);
  if (last_nl == std::string::npos || last_nl < first_nl) return t;
  return text::trim(t.substr(first_nl + 1, last_nl - first_nl - 1));
}

}  // namespace

Conversation parse_transcript(const RawTranscript& raw) {
  const std::string body = strip_surrounding_fence(raw.text);

  struct Block {
    Role role;
    std::string content;
  };
  std::vector<Block> blocks;

  for (std::string_view line : split_lines(body)) {
    MarkerMatch m = match_marker(line);
    if (m.matched) {
      blocks.push_back({m.role, std::string(line.substr(m.content_begin))});
    } else if (!blocks.empty()) {
      blocks.back().content += '\n';
      blocks.back().content += line;
    }
    // Preamble before the first marker is model chatter; dropped.
  }

  if (blocks.empty()) {
    throw TranscriptError(TranscriptError::Kind::NoTurnsFound, 0,
                          "no gebruiker:/assistent: markers found");
  }

  Conversation conv;
  conv.id = raw.seed_id;
  conv.seed_id = raw.seed_id.empty()
                     ? std::nullopt
                     : std::optional<std::string>(raw.seed_id);
  conv.persona_name = raw.persona_name.empty()
                          ? std::nullopt
                          : std::optional<std::string>(raw.persona_name);

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string content = text::normalize_nfc(text::trim(blocks[i].content));
    if (content.empty()) {
      throw TranscriptError(TranscriptError::Kind::EmptyTurn, i,
                            "empty turn at index " + std::to_string(i));
    }
    conv.turns.push_back({blocks[i].role, std::move(content)});
  }

  if (conv.turns.front().role != Role::User) {
    throw TranscriptError(TranscriptError::Kind::FirstRoleNotUser, 0,
                          "transcript must start with gebruiker:");
  }
  for (std::size_t i = 1; i < conv.turns.size(); ++i) {
    if (conv.turns[i].role == conv.turns[i - 1].role) {
      throw TranscriptError(TranscriptError::Kind::AlternationBroken, i,
                            "roles must alternate; broken at turn " +
                                std::to_string(i));
    }
  }
  // A trailing user question without an answer is dropped rather than
  // rejected; the exchange up to the last assistant turn is intact.
  if (conv.turns.back().role == Role::User) {
    conv.turns.pop_back();
    if (conv.turns.empty()) {
      throw TranscriptError(TranscriptError::Kind::NoTurnsFound, 0,
                            "only an unanswered user turn found");
    }
  }
  return conv;
}

std::string render_transcript(const Conversation& conv) {
  std::ostringstream out;
  for (std::size_t i = 0; i < conv.turns.size(); ++i) {
    const Turn& t = conv.turns[i];
    if (t.role == Role::System) {
      throw TranscriptError(TranscriptError::Kind::SystemTurnUnsupported, i,
                            "system turns have no transcript form");
    }
    if (i > 0) out << "\n\n";
    out << (t.role == Role::User ? "gebruiker: " : "assistent: ")
        << t.content;
  }
  return out.str();
}

std::size_t user_turn_count(const Conversation& conv) {
  std::size_t n = 0;
  for (const Turn& t : conv.turns) {
    if (t.role == Role::User) ++n;
  }
  return n;
}

int extract_rating(const std::string& text) {
  static constexpr std::string_view kOpen = "<rating>";
  static constexpr std::string_view kClose = "</rating>";
  std::size_t pos = 0;
  while ((pos = text.find(kOpen, pos)) != std::string::npos) {
    std::size_t i = pos + kOpen.size();
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t digits_begin = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > digits_begin) {
      std::size_t digits_end = i;
      while (i < text.size() &&
             std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (text.compare(i, kClose.size(), kClose) == 0) {
        long k = 0;
        for (std::size_t d = digits_begin; d < digits_end; ++d) {
          k = k * 10 + (text[d] - '0');
          if (k > 999) break;  // anything this large is out of range anyway
        }
        if (k < 1 || k > 5) {
          throw RatingError(RatingError::Kind::OutOfRange, static_cast<int>(k),
                            "rating " + std::to_string(k) +
                                " outside 1..5");
        }
        return static_cast<int>(k);
      }
    }
    pos += kOpen.size();
  }
  throw RatingError(RatingError::Kind::NotFound, 0, "no <rating> tag found");
}

}  // namespace polder
