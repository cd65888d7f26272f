#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "polder/filters.hpp"
#include "polder/gateway.hpp"
#include "polder/judge.hpp"
#include "polder/jsonl.hpp"
#include "polder/personas.hpp"
#include "polder/recipes.hpp"

namespace polder {

// Effective configuration for one run. Stage inputs/outputs come from CLI
// flags (or the config's "paths" object); everything else lives here.
struct RunConfig {
  std::string backend_kind = "mock";  // mock | wire
  BackendConfig backend;
  FilterRuleSet rules = FilterRuleSet::defaults();
  CleanedThresholds thresholds;
  std::optional<std::string> persona_table_path;
  std::uint64_t seed = 0;
  bool resume = false;
  bool reject_turn_count_out_of_range = true;
  int regeneration_attempts = 1;
  int judge_votes = 1;  // odd; >1 takes the per-criterion median
  std::map<std::string, std::string> paths;  // optional per-stage defaults

  static RunConfig from_json(const Json& j);
  Json to_json() const;
  // FNV-1a over the canonical JSON dump, as a 16-hex-digit string.
  std::string hash() const;
};

RunConfig load_run_config(const std::filesystem::path& path);

// Backend per config: "mock" is seeded from config.seed, "wire" talks to
// config.backend.base_url.
std::unique_ptr<ChatBackend> make_backend(const RunConfig& config);

// Per-stage outcome. Counts reconcile:
// input_count == output_count + sum(drops_by_reason). Resumed runs count
// previously completed records under drops_by_reason["already_completed"]
// and output_count covers newly written records only.
struct StageReport {
  std::string stage;
  std::size_t input_count = 0;
  std::size_t output_count = 0;
  std::map<std::string, std::size_t> drops_by_reason;
  std::uint64_t seed = 0;
  std::string config_hash;

  Json to_json() const;
  void write(const std::filesystem::path& path) const;
  bool reconciles() const;
};

PersonaTable persona_table_for(const RunConfig& config);

// seeds -> persona-conditioned self-chat conversations (SFT JSONL).
StageReport run_generate(const RunConfig& config, ChatBackend& backend,
                         const std::filesystem::path& seeds_path,
                         const std::filesystem::path& out_path);

// seeds -> Dutch prompts {"id","system","prompt","source"}; the system
// message, when present, is translated too.
StageReport run_translate(const RunConfig& config, ChatBackend& backend,
                          const std::filesystem::path& seeds_path,
                          const std::filesystem::path& out_path);

// prompts -> single-turn answers {"id","model","text"}.
StageReport run_answer(const RunConfig& config, ChatBackend& backend,
                       const std::filesystem::path& prompts_path,
                       const std::filesystem::path& out_path,
                       const std::string& model_name);

// conversations or pairs -> kept records; drop counts by rule.
StageReport run_filter(const RunConfig& config,
                       const std::filesystem::path& in_path,
                       const std::filesystem::path& out_path);

// prompts + two answer files -> rated candidates
// {"id","system","prompt","responses":[{"model","text","ratings"},...]}.
StageReport run_judge(const RunConfig& config, ChatBackend& backend,
                      const std::filesystem::path& prompts_path,
                      const std::filesystem::path& responses_a_path,
                      const std::filesystem::path& responses_b_path,
                      const std::filesystem::path& out_path);

// candidates -> preference pairs + discard log
// {"id","reason","avg_a","avg_b","gap"}.
StageReport run_pair(const RunConfig& config, ChatBackend* backend,
                     DecisionMode mode,
                     const std::filesystem::path& candidates_path,
                     const std::filesystem::path& out_path,
                     const std::filesystem::path& discards_path);

StageReport run_mix(const RunConfig& config,
                    const std::filesystem::path& manifest_path,
                    const std::filesystem::path& out_path,
                    const std::filesystem::path& mix_report_path);

StageReport run_split(const RunConfig& config,
                      const std::filesystem::path& in_path,
                      const std::filesystem::path& train_path,
                      const std::filesystem::path& test_path,
                      double test_ratio);

StageReport run_dedup(const RunConfig& config,
                      const std::filesystem::path& in_path,
                      const std::filesystem::path& out_path);

StageReport run_stats(const RunConfig& config,
                      const std::filesystem::path& in_path,
                      const std::filesystem::path& out_path);

StageReport run_recipe(const RunConfig& config, RecipeKind kind,
                       const std::filesystem::path& out_path);

// Candidate-file (de)serialization, shared by judge and pair.
Json candidate_to_json(const PairCandidate& candidate);
PairCandidate candidate_from_json(const Json& j);

}  // namespace polder
