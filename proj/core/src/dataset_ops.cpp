#include "polder/dataset_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "polder/text.hpp"

namespace polder {

namespace {

std::string dedup_key(const Conversation& c) {
  std::string key;
  for (const Turn& t : c.turns) {
    key += role_name(t.role);
    key += '\x1e';
    key += text::collapse_whitespace(text::normalize_nfc(t.content));
    key += '\x1f';
  }
  return key;
}

std::string dedup_key(const PreferencePair& p) {
  return text::collapse_whitespace(text::normalize_nfc(p.prompt_nl));
}

template <typename Record>
DedupResult<Record> dedup_by_key(const std::vector<Record>& records) {
  DedupResult<Record> out;
  std::set<std::string> seen;
  for (const Record& r : records) {
    if (seen.insert(dedup_key(r)).second) {
      out.kept.push_back(r);
    } else {
      ++out.removed;
    }
  }
  return out;
}

std::string record_identity(const Json& record) {
  if (record.is_object() && record.contains("id") &&
      record.at("id").is_string()) {
    return record.at("id").get<std::string>();
  }
  return record.dump();
}

}  // namespace

Json MixResult::report_json() const {
  Json j;
  Json entries_json = Json::array();
  for (const MixEntryReport& e : entries) {
    Json ej;
    ej["name"] = e.name;
    ej["available"] = e.available;
    ej["selected"] = e.selected;
    ej["share"] = e.share;
    entries_json.push_back(std::move(ej));
  }
  j["total"] = records.size();
  j["entries"] = std::move(entries_json);
  return j;
}

MixResult mix_datasets(const DatasetManifest& manifest,
                       std::uint64_t rng_seed) {
  if (manifest.entries.empty()) throw EmptyManifestError();

  MixResult out;
  for (std::size_t idx = 0; idx < manifest.entries.size(); ++idx) {
    const ManifestEntry& entry = manifest.entries[idx];
    std::vector<Json> records = load_json_lines(entry.path);
    const std::size_t n = records.size();
    const auto k = static_cast<std::size_t>(
        std::floor(entry.fraction * static_cast<double>(n)));

    std::vector<std::size_t> chosen;
    if (entry.fraction >= 1.0) {
      chosen.resize(n);
      for (std::size_t i = 0; i < n; ++i) chosen[i] = i;
    } else {
      // Partial Fisher-Yates over the index vector, then restore input
      // order among the selected records.
      std::vector<std::size_t> indices(n);
      for (std::size_t i = 0; i < n; ++i) indices[i] = i;
      std::mt19937_64 rng(text::mix64(
          rng_seed ^ (0x9E3779B97F4A7C15ull * (idx + 1))));
      for (std::size_t i = 0; i < k && n > 0; ++i) {
        const std::size_t j = i + rng() % (n - i);
        std::swap(indices[i], indices[j]);
      }
      chosen.assign(indices.begin(),
                    indices.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(chosen.begin(), chosen.end());
    }

    MixEntryReport report;
    report.name = entry.name;
    report.available = n;
    report.selected = chosen.size();
    out.entries.push_back(report);
    for (std::size_t i : chosen) out.records.push_back(std::move(records[i]));
  }

  const double total = static_cast<double>(out.records.size());
  for (MixEntryReport& e : out.entries) {
    e.share = total > 0 ? static_cast<double>(e.selected) / total : 0.0;
  }
  return out;
}

SplitResult split_dataset(const std::vector<Json>& records, double test_ratio,
                          std::uint64_t seed) {
  const std::size_t n = records.size();
  const auto test_size = static_cast<std::size_t>(
      std::llround(test_ratio * static_cast<double>(n)));

  struct Ranked {
    std::uint64_t rank;
    std::string identity;
    std::size_t index;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string identity = record_identity(records[i]);
    ranked.push_back(
        {text::mix64(text::fnv1a64(identity) ^ text::mix64(seed)), identity,
         i});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.identity < b.identity;
  });

  std::vector<bool> is_test(n, false);
  for (std::size_t i = 0; i < test_size && i < n; ++i) {
    is_test[ranked[i].index] = true;
  }

  SplitResult out;
  for (std::size_t i = 0; i < n; ++i) {
    (is_test[i] ? out.test : out.train).push_back(records[i]);
  }
  return out;
}

DedupResult<Conversation> dedup_exact(const std::vector<Conversation>& records) {
  return dedup_by_key(records);
}

DedupResult<PreferencePair> dedup_exact(
    const std::vector<PreferencePair>& records) {
  return dedup_by_key(records);
}

ChatTemplate ChatTemplate::zephyr() {
  ChatTemplate t;
  t.role_markers[Role::System] = {"<|system|>", ""};
  t.role_markers[Role::User] = {"<|user|>", ""};
  t.role_markers[Role::Assistant] = {"<|assistant|>", ""};
  t.eos_token = "</s>";
  t.generation_prefix = "<|assistant|>";
  return t;
}

std::string render_chat_template(const Conversation& conv,
                                 const ChatTemplate& tmpl,
                                 bool add_generation_prefix) {
  std::string out;
  for (const Turn& t : conv.turns) {
    RoleMarker marker;
    auto it = tmpl.role_markers.find(t.role);
    if (it != tmpl.role_markers.end()) marker = it->second;
    if (!marker.prefix.empty()) {
      out += marker.prefix;
      out += '\n';
    }
    out += t.content;
    out += marker.suffix;
    out += tmpl.eos_token;
    out += '\n';
  }
  if (add_generation_prefix && !tmpl.generation_prefix.empty()) {
    out += tmpl.generation_prefix;
    out += '\n';
  }
  return out;
}

std::size_t whitespace_token_count(std::string_view text) {
  std::size_t n = 0;
  bool in_token = false;
  for (char c : text) {
    const bool space =
        c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '\f' ||
        c == '\v';
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

Json TokenStats::to_json() const {
  Json j;
  j["total_tokens"] = total;
  j["per_field"] = per_field;
  return j;
}

TokenStats& TokenStats::operator+=(const TokenStats& other) {
  total += other.total;
  for (const auto& [field, count] : other.per_field) {
    per_field[field] += count;
  }
  return *this;
}

TokenStats token_stats(const std::vector<Conversation>& records,
                       const Tokenizer& tokenizer) {
  TokenStats stats;
  for (const Conversation& c : records) {
    for (const Turn& t : c.turns) {
      const std::size_t count = tokenizer(t.content);
      stats.total += count;
      stats.per_field[std::string(role_name(t.role))] += count;
    }
  }
  return stats;
}

TokenStats token_stats(const std::vector<PreferencePair>& records,
                       const Tokenizer& tokenizer) {
  TokenStats stats;
  auto add = [&](const std::string& field, const std::string& content) {
    const std::size_t count = tokenizer(content);
    stats.total += count;
    stats.per_field[field] += count;
  };
  for (const PreferencePair& p : records) {
    if (p.system) add("system", *p.system);
    add("prompt", p.prompt_nl);
    add("chosen", p.chosen);
    add("rejected", p.rejected);
  }
  return stats;
}

}  // namespace polder
