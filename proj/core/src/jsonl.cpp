#include "polder/jsonl.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "polder/text.hpp"

namespace polder {

namespace {

std::string nfc(const std::string& s) { return text::normalize_nfc(s); }

Json opt_string(const std::optional<std::string>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<std::string> opt_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return nfc(j.at(key).get<std::string>());
}

Json ratings_to_json(const std::optional<RatingSet>& r) {
  if (!r) return Json(nullptr);
  Json j;
  j["dutchness"] = r->dutchness;
  j["helpfulness"] = r->helpfulness;
  j["conciseness"] = r->conciseness;
  return j;
}

std::optional<RatingSet> ratings_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const Json& r = j.at(key);
  RatingSet out;
  out.dutchness = r.at("dutchness").get<int>();
  out.helpfulness = r.at("helpfulness").get<int>();
  out.conciseness = r.at("conciseness").get<int>();
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

template <typename T, typename Parse>
std::vector<T> load_typed(const std::filesystem::path& path, Parse parse) {
  std::vector<T> out;
  std::size_t line_no = 0;
  for (const std::string& line : read_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(line_no, e.what());
    }
    try {
      out.push_back(parse(j));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(line_no, e.what());
    }
  }
  return out;
}

template <typename T, typename Serialize>
WriteReport write_lines_of(const std::vector<T>& records,
                           const std::filesystem::path& path,
                           Serialize serialize) {
  std::ostringstream buf;
  for (const T& r : records) {
    buf << serialize(r).dump() << '\n';
  }
  const std::string bytes = buf.str();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
  return {records.size(), bytes.size()};
}

}  // namespace

Json to_json(const SeedPrompt& seed) {
  Json j;
  j["id"] = seed.id;
  j["system"] = opt_string(seed.system);
  j["user_en"] = seed.user_en;
  j["source"] = seed.source;
  return j;
}

Json to_json(const Conversation& conv) {
  Json j;
  j["id"] = conv.id;
  j["persona"] = opt_string(conv.persona_name);
  j["seed_id"] = opt_string(conv.seed_id);
  Json messages = Json::array();
  for (const Turn& t : conv.turns) {
    Json m;
    m["role"] = std::string(role_name(t.role));
    m["content"] = t.content;
    messages.push_back(std::move(m));
  }
  j["messages"] = std::move(messages);
  return j;
}

Json to_json(const PreferencePair& pair) {
  Json j;
  j["id"] = pair.id;
  j["system"] = opt_string(pair.system);
  j["prompt"] = pair.prompt_nl;
  j["chosen"] = pair.chosen;
  j["rejected"] = pair.rejected;
  j["chosen_model"] = pair.chosen_model;
  j["rejected_model"] = pair.rejected_model;
  j["chosen_ratings"] = ratings_to_json(pair.chosen_ratings);
  j["rejected_ratings"] = ratings_to_json(pair.rejected_ratings);
  j["decision_mode"] = std::string(decision_mode_name(pair.decision_mode));
  return j;
}

SeedPrompt seed_from_json(const Json& j) {
  SeedPrompt s;
  s.id = j.at("id").get<std::string>();
  s.system = opt_from(j, "system");
  s.user_en = nfc(j.at("user_en").get<std::string>());
  s.source = j.value("source", std::string{});
  if (text::is_blank(s.user_en)) {
    throw nlohmann::json::other_error::create(501, "user_en is blank", &j);
  }
  return s;
}

Conversation conversation_from_json(const Json& j) {
  Conversation c;
  c.id = j.at("id").get<std::string>();
  c.persona_name = opt_from(j, "persona");
  c.seed_id = opt_from(j, "seed_id");
  for (const Json& m : j.at("messages")) {
    auto role = role_from_name(m.at("role").get<std::string>());
    if (!role) {
      throw nlohmann::json::other_error::create(502, "unknown role", &j);
    }
    c.turns.push_back({*role, nfc(m.at("content").get<std::string>())});
  }
  return c;
}

PreferencePair pair_from_json(const Json& j) {
  PreferencePair p;
  p.id = j.at("id").get<std::string>();
  p.system = opt_from(j, "system");
  p.prompt_nl = nfc(j.at("prompt").get<std::string>());
  p.chosen = nfc(j.at("chosen").get<std::string>());
  p.rejected = nfc(j.at("rejected").get<std::string>());
  p.chosen_model = j.at("chosen_model").get<std::string>();
  p.rejected_model = j.at("rejected_model").get<std::string>();
  p.chosen_ratings = ratings_from_json(j, "chosen_ratings");
  p.rejected_ratings = ratings_from_json(j, "rejected_ratings");
  auto mode = decision_mode_from_name(j.at("decision_mode").get<std::string>());
  if (!mode) {
    throw nlohmann::json::other_error::create(503, "unknown decision_mode", &j);
  }
  p.decision_mode = *mode;
  return p;
}

std::vector<SeedPrompt> load_seeds(const std::filesystem::path& path) {
  auto seeds = load_typed<SeedPrompt>(path, seed_from_json);
  std::set<std::string> seen;
  for (const SeedPrompt& s : seeds) {
    if (!seen.insert(s.id).second) throw DuplicateIdError(s.id);
  }
  return seeds;
}

std::vector<Conversation> load_conversations(const std::filesystem::path& path) {
  return load_typed<Conversation>(path, conversation_from_json);
}

std::vector<PreferencePair> load_pairs(const std::filesystem::path& path) {
  return load_typed<PreferencePair>(path, pair_from_json);
}

WriteReport write_records(const std::vector<Conversation>& records,
                          const std::filesystem::path& path) {
  for (const Conversation& c : records) {
    auto violations = validate_conversation(c);
    if (!violations.empty()) {
      throw RecordValidationError("record " + c.id + ": " +
                                  violation_message(violations.front()));
    }
  }
  return write_lines_of(records, path,
                        [](const Conversation& r) { return to_json(r); });
}

WriteReport write_records(const std::vector<PreferencePair>& records,
                          const std::filesystem::path& path) {
  for (const PreferencePair& p : records) {
    auto violations = validate_pair(p);
    if (!violations.empty()) {
      throw RecordValidationError("record " + p.id + ": " +
                                  violation_message(violations.front()));
    }
  }
  return write_lines_of(records, path,
                        [](const PreferencePair& r) { return to_json(r); });
}

WriteReport write_seeds(const std::vector<SeedPrompt>& records,
                        const std::filesystem::path& path) {
  return write_lines_of(records, path,
                        [](const SeedPrompt& r) { return to_json(r); });
}

std::vector<Json> load_json_lines(const std::filesystem::path& path) {
  return load_typed<Json>(path, [](const Json& j) { return j; });
}

WriteReport write_json_lines(const std::vector<Json>& lines,
                             const std::filesystem::path& path) {
  return write_lines_of(lines, path, [](const Json& j) { return j; });
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(0, e.what());
  }
  DatasetManifest m;
  std::set<std::string> paths;
  for (const Json& e : j.at("entries")) {
    ManifestEntry entry;
    entry.path = e.at("path").get<std::string>();
    entry.fraction = e.value("fraction", 1.0);
    entry.name = e.value("name", entry.path);
    if (entry.fraction <= 0.0 || entry.fraction > 1.0) {
      throw SchemaError(0, "fraction out of (0,1]: " + entry.name);
    }
    if (!paths.insert(entry.path).second) {
      throw SchemaError(0, "duplicate manifest path: " + entry.path);
    }
    m.entries.push_back(std::move(entry));
  }
  if (j.contains("split")) {
    m.split.test_ratio = j["split"].value("test_ratio", 0.1);
    m.split.seed = j["split"].value("seed", std::uint64_t{0});
  }
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace polder
