#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polder/records.hpp"

namespace polder {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::size_t line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class DuplicateIdError : public std::runtime_error {
 public:
  explicit DuplicateIdError(const std::string& id)
      : std::runtime_error("duplicate id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class RecordValidationError : public std::runtime_error {
 public:
  explicit RecordValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// JSON layouts are fixed: field order below is the wire format.
//   seed          {"id","system","user_en","source"}
//   conversation  {"id","persona","seed_id","messages":[{"role","content"},..]}
//   pair          {"id","system","prompt","chosen","rejected","chosen_model",
//                  "rejected_model","chosen_ratings","rejected_ratings",
//                  "decision_mode"}
Json to_json(const SeedPrompt& seed);
Json to_json(const Conversation& conv);
Json to_json(const PreferencePair& pair);

// Parsers normalize all text fields to NFC.
SeedPrompt seed_from_json(const Json& j);
Conversation conversation_from_json(const Json& j);
PreferencePair pair_from_json(const Json& j);

// Loads one JSON object per line. Throws IoError, SchemaError(line_no) and,
// for seeds, DuplicateIdError.
std::vector<SeedPrompt> load_seeds(const std::filesystem::path& path);
std::vector<Conversation> load_conversations(const std::filesystem::path& path);
std::vector<PreferencePair> load_pairs(const std::filesystem::path& path);

struct WriteReport {
  std::size_t count = 0;
  std::size_t bytes = 0;
};

// One compact JSON object per line, UTF-8, trailing newline. Identical
// input lists produce byte-identical files. Records failing validation
// throw RecordValidationError.
WriteReport write_records(const std::vector<Conversation>& records,
                          const std::filesystem::path& path);
WriteReport write_records(const std::vector<PreferencePair>& records,
                          const std::filesystem::path& path);
WriteReport write_seeds(const std::vector<SeedPrompt>& records,
                        const std::filesystem::path& path);

// Untyped helpers for stages that pass records through (mix/split).
std::vector<Json> load_json_lines(const std::filesystem::path& path);
WriteReport write_json_lines(const std::vector<Json>& lines,
                             const std::filesystem::path& path);

DatasetManifest load_manifest(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace polder
