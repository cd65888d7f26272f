#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polder/jsonl.hpp"
#include "polder/records.hpp"

namespace polder {

class EmptyManifestError : public std::runtime_error {
 public:
  EmptyManifestError() : std::runtime_error("manifest has no entries") {}
};

struct MixEntryReport {
  std::string name;
  std::size_t available = 0;
  std::size_t selected = 0;
  double share = 0.0;  // of the mixed total
};

struct MixResult {
  std::vector<Json> records;
  std::vector<MixEntryReport> entries;

  Json report_json() const;
};

// Selects floor(fraction * n) records per entry by seeded sampling without
// replacement (fraction 1.0 keeps everything); input order is preserved
// within each entry and entries are concatenated in manifest order.
MixResult mix_datasets(const DatasetManifest& manifest,
                       std::uint64_t rng_seed);

struct SplitResult {
  std::vector<Json> train;
  std::vector<Json> test;
};

// |test| = round(test_ratio * n); membership is decided by ranking records
// on a hash of (record id, seed), so it is stable across runs and does not
// depend on input order.
SplitResult split_dataset(const std::vector<Json>& records, double test_ratio,
                          std::uint64_t seed);

template <typename Record>
struct DedupResult {
  std::vector<Record> kept;
  std::size_t removed = 0;
};

// Exact dedup on NFC-normalized, whitespace-collapsed keys: the prompt for
// preference pairs, the full role-tagged message sequence for
// conversations. First occurrence wins; order is stable.
DedupResult<Conversation> dedup_exact(const std::vector<Conversation>& records);
DedupResult<PreferencePair> dedup_exact(
    const std::vector<PreferencePair>& records);

struct RoleMarker {
  std::string prefix;
  std::string suffix;
};

struct ChatTemplate {
  std::map<Role, RoleMarker> role_markers;
  std::string eos_token;
  std::string generation_prefix;

  // <|system|>/<|user|>/<|assistant|> markers with </s> eos.
  static ChatTemplate zephyr();
};

// Per turn: marker prefix, newline, content, marker suffix, eos token,
// newline. With add_generation_prefix the assistant marker is appended so
// the text ends ready for generation.
std::string render_chat_template(const Conversation& conv,
                                 const ChatTemplate& tmpl,
                                 bool add_generation_prefix);

using Tokenizer = std::function<std::size_t(std::string_view)>;

// Default tokenizer: maximal whitespace-separated runs.
std::size_t whitespace_token_count(std::string_view text);

struct TokenStats {
  std::size_t total = 0;
  std::map<std::string, std::size_t> per_field;

  Json to_json() const;
  TokenStats& operator+=(const TokenStats& other);
};

// Counts over raw message contents; no chat template applied.
TokenStats token_stats(const std::vector<Conversation>& records,
                       const Tokenizer& tokenizer = whitespace_token_count);
TokenStats token_stats(const std::vector<PreferencePair>& records,
                       const Tokenizer& tokenizer = whitespace_token_count);

}  // namespace polder
