#include "polder/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "polder/dataset_ops.hpp"
#include "polder/text.hpp"
#include "polder/transcript.hpp"

namespace polder {

namespace {

namespace fs = std::filesystem;

std::mt19937_64 record_rng(std::uint64_t run_seed, std::string_view record_id) {
  return std::mt19937_64(
      text::mix64(text::mix64(run_seed) ^ text::fnv1a64(record_id)));
}

// Ids already present in a JSONL output, for --resume.
std::set<std::string> completed_ids(const fs::path& out_path) {
  std::set<std::string> ids;
  if (!fs::exists(out_path)) return ids;
  for (const Json& line : load_json_lines(out_path)) {
    if (line.is_object() && line.contains("id") && line.at("id").is_string()) {
      ids.insert(line.at("id").get<std::string>());
    }
  }
  return ids;
}

void write_or_append_lines(const std::vector<Json>& lines,
                           const fs::path& path, bool append) {
  if (!append) {
    write_json_lines(lines, path);
    return;
  }
  std::ostringstream buf;
  for (const Json& j : lines) buf << j.dump() << '\n';
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open " + path.string() + " for append");
  const std::string bytes = buf.str();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

struct AnswerLine {
  std::string id;
  std::string model;
  std::string text;
};

std::vector<AnswerLine> load_answers(const fs::path& path) {
  std::vector<AnswerLine> out;
  for (const Json& j : load_json_lines(path)) {
    out.push_back({j.at("id").get<std::string>(),
                   j.at("model").get<std::string>(),
                   text::normalize_nfc(j.at("text").get<std::string>())});
  }
  return out;
}

struct PromptLine {
  std::string id;
  std::optional<std::string> system;
  std::string prompt;
  std::string source;
};

PromptLine prompt_from_json(const Json& j) {
  PromptLine p;
  p.id = j.at("id").get<std::string>();
  if (j.contains("system") && !j.at("system").is_null()) {
    p.system = text::normalize_nfc(j.at("system").get<std::string>());
  }
  p.prompt = text::normalize_nfc(j.at("prompt").get<std::string>());
  p.source = j.value("source", std::string{});
  return p;
}

Json prompt_to_json(const PromptLine& p) {
  Json j;
  j["id"] = p.id;
  j["system"] = p.system ? Json(*p.system) : Json(nullptr);
  j["prompt"] = p.prompt;
  j["source"] = p.source;
  return j;
}

std::vector<PromptLine> load_prompts(const fs::path& path) {
  std::vector<PromptLine> out;
  for (const Json& j : load_json_lines(path)) out.push_back(prompt_from_json(j));
  return out;
}

enum class FileKind { Conversations, Pairs };

FileKind sniff_kind(const fs::path& path) {
  for (const Json& j : load_json_lines(path)) {
    if (!j.is_object()) break;
    if (j.contains("messages")) return FileKind::Conversations;
    if (j.contains("chosen")) return FileKind::Pairs;
    break;
  }
  throw SchemaError(1, "cannot tell conversations from preference pairs in " +
                           path.string());
}

}  // namespace

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig c;
  c.backend_kind = j.value("backend_kind", std::string("mock"));
  if (j.contains("backend")) {
    const Json& b = j["backend"];
    c.backend.base_url = b.value("base_url", std::string{});
    c.backend.model_name = b.value("model_name", std::string("gpt-4"));
    c.backend.api_key_env = b.value("api_key_env", std::string("OPENAI_API_KEY"));
    c.backend.max_in_flight = b.value("max_in_flight", 4);
    c.backend.max_retries = b.value("max_retries", 5);
    c.backend.timeout_seconds = b.value("timeout_seconds", 60.0);
    c.backend.retry_base_seconds = b.value("retry_base_seconds", 1.0);
    c.backend.retry_cap_seconds = b.value("retry_cap_seconds", 30.0);
  }
  if (j.contains("rules")) c.rules = rules_from_json(j["rules"]);
  if (j.contains("thresholds")) {
    const Json& t = j["thresholds"];
    c.thresholds.min_avg_both = t.value("min_avg_both", 4.0);
    c.thresholds.min_each_criterion = t.value("min_each_criterion", 3.5);
    c.thresholds.min_gap = t.value("min_gap", 0.25);
    c.thresholds.max_gap = t.value("max_gap", 2.0);
  }
  if (j.contains("persona_table") && !j["persona_table"].is_null()) {
    c.persona_table_path = j["persona_table"].get<std::string>();
  }
  c.seed = j.value("seed", std::uint64_t{0});
  c.resume = j.value("resume", false);
  c.reject_turn_count_out_of_range =
      j.value("reject_turn_count_out_of_range", true);
  c.regeneration_attempts = j.value("regeneration_attempts", 1);
  c.judge_votes = j.value("judge_votes", 1);
  if (j.contains("paths")) {
    for (const auto& [key, value] : j["paths"].items()) {
      c.paths[key] = value.get<std::string>();
    }
  }
  return c;
}

Json RunConfig::to_json() const {
  Json j;
  j["backend_kind"] = backend_kind;
  Json b;
  b["base_url"] = backend.base_url;
  b["model_name"] = backend.model_name;
  b["api_key_env"] = backend.api_key_env;
  b["max_in_flight"] = backend.max_in_flight;
  b["max_retries"] = backend.max_retries;
  b["timeout_seconds"] = backend.timeout_seconds;
  b["retry_base_seconds"] = backend.retry_base_seconds;
  b["retry_cap_seconds"] = backend.retry_cap_seconds;
  j["backend"] = std::move(b);
  j["rules"] = rules_to_json(rules);
  Json t;
  t["min_avg_both"] = thresholds.min_avg_both;
  t["min_each_criterion"] = thresholds.min_each_criterion;
  t["min_gap"] = thresholds.min_gap;
  t["max_gap"] = thresholds.max_gap;
  j["thresholds"] = std::move(t);
  j["persona_table"] =
      persona_table_path ? Json(*persona_table_path) : Json(nullptr);
  j["seed"] = seed;
  j["resume"] = resume;
  j["reject_turn_count_out_of_range"] = reject_turn_count_out_of_range;
  j["regeneration_attempts"] = regeneration_attempts;
  j["judge_votes"] = judge_votes;
  j["paths"] = paths;
  return j;
}

std::string RunConfig::hash() const {
  std::uint64_t h = text::fnv1a64(to_json().dump());
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

RunConfig load_run_config(const fs::path& path) {
  return RunConfig::from_json(Json::parse(read_text_file(path)));
}

std::unique_ptr<ChatBackend> make_backend(const RunConfig& config) {
  if (config.backend_kind == "mock") {
    return make_mock_backend(config.seed);
  }
  if (config.backend_kind == "wire") {
    return make_wire_backend(config.backend);
  }
  throw std::invalid_argument("unknown backend kind: " + config.backend_kind);
}

Json StageReport::to_json() const {
  Json j;
  j["stage"] = stage;
  j["input_count"] = input_count;
  j["output_count"] = output_count;
  j["drops_by_reason"] = drops_by_reason;
  j["seed"] = seed;
  j["config_hash"] = config_hash;
  return j;
}

void StageReport::write(const fs::path& path) const {
  write_text_file(path, to_json().dump(2) + "\n");
}

bool StageReport::reconciles() const {
  std::size_t drops = 0;
  for (const auto& [reason, count] : drops_by_reason) drops += count;
  return input_count == output_count + drops;
}

PersonaTable persona_table_for(const RunConfig& config) {
  if (config.persona_table_path) {
    return load_persona_table(*config.persona_table_path);
  }
  return builtin_table();
}

StageReport run_generate(const RunConfig& config, ChatBackend& backend,
                         const fs::path& seeds_path, const fs::path& out_path) {
  StageReport report;
  report.stage = "generate";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const PersonaTable& table = persona_table_for(config);
  const std::vector<SeedPrompt> seeds = load_seeds(seeds_path);
  report.input_count = seeds.size();

  const bool resuming = config.resume && fs::exists(out_path);
  const std::set<std::string> done = resuming ? completed_ids(out_path)
                                              : std::set<std::string>{};

  struct Pending {
    const SeedPrompt* seed;
    std::string persona;
    ChatRequest request;
  };
  std::vector<Pending> pending;
  for (const SeedPrompt& s : seeds) {
    if (done.count(s.id) > 0) {
      ++report.drops_by_reason["already_completed"];
      continue;
    }
    std::mt19937_64 rng = record_rng(config.seed, s.id);
    const Persona& persona = sample_persona(table, rng);
    pending.push_back({&s, persona.name,
                       render_generation_prompt(persona, s)});
  }

  std::vector<ChatRequest> requests;
  requests.reserve(pending.size());
  for (const Pending& p : pending) requests.push_back(p.request);
  std::vector<BatchItem> items =
      run_batch(backend, requests, config.backend.max_in_flight);

  std::vector<Conversation> conversations;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Pending& p = pending[i];
    if (!items[i].ok) {
      ++report.drops_by_reason["gateway_error"];
      continue;
    }
    if (items[i].result.finish_reason == FinishReason::ContentFilter) {
      ++report.drops_by_reason["content_filter"];
      continue;
    }

    std::optional<Conversation> conv;
    bool regeneration_failed = false;
    for (int attempt = 0; attempt <= config.regeneration_attempts; ++attempt) {
      std::string body = items[i].result.text;
      if (attempt > 0) {
        try {
          body = backend.complete(p.request).text;
        } catch (const std::exception&) {
          regeneration_failed = true;
          break;
        }
      }
      try {
        conv = parse_transcript({body, p.seed->id, p.persona});
        break;
      } catch (const TranscriptError&) {
      }
    }
    if (!conv) {
      ++report.drops_by_reason[regeneration_failed ? "gateway_error"
                                                   : "malformed_transcript"];
      continue;
    }

    const std::size_t user_turns = user_turn_count(*conv);
    if (user_turns < kMinSelfChatTurns || user_turns > kMaxSelfChatTurns) {
      if (config.reject_turn_count_out_of_range) {
        ++report.drops_by_reason["turn_count_out_of_range"];
        continue;
      }
    }
    conversations.push_back(std::move(*conv));
  }

  std::vector<Json> lines;
  lines.reserve(conversations.size());
  for (const Conversation& c : conversations) lines.push_back(to_json(c));
  write_or_append_lines(lines, out_path, resuming);
  report.output_count = conversations.size();
  return report;
}

StageReport run_translate(const RunConfig& config, ChatBackend& backend,
                          const fs::path& seeds_path,
                          const fs::path& out_path) {
  StageReport report;
  report.stage = "translate";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const std::vector<SeedPrompt> seeds = load_seeds(seeds_path);
  report.input_count = seeds.size();

  const bool resuming = config.resume && fs::exists(out_path);
  const std::set<std::string> done = resuming ? completed_ids(out_path)
                                              : std::set<std::string>{};

  struct Pending {
    const SeedPrompt* seed;
    std::size_t prompt_index;
    std::optional<std::size_t> system_index;
  };
  std::vector<Pending> pending;
  std::vector<ChatRequest> requests;
  for (const SeedPrompt& s : seeds) {
    if (done.count(s.id) > 0) {
      ++report.drops_by_reason["already_completed"];
      continue;
    }
    Pending p{&s, requests.size(), std::nullopt};
    requests.push_back(render_translation_request(s.user_en));
    if (s.system && !text::is_blank(*s.system)) {
      p.system_index = requests.size();
      requests.push_back(render_translation_request(*s.system));
    }
    pending.push_back(p);
  }

  std::vector<BatchItem> items =
      run_batch(backend, requests, config.backend.max_in_flight);

  std::vector<Json> lines;
  for (const Pending& p : pending) {
    const BatchItem& prompt_item = items[p.prompt_index];
    const BatchItem* system_item =
        p.system_index ? &items[*p.system_index] : nullptr;
    if (!prompt_item.ok || (system_item != nullptr && !system_item->ok)) {
      ++report.drops_by_reason["gateway_error"];
      continue;
    }
    if (prompt_item.result.finish_reason == FinishReason::ContentFilter ||
        (system_item != nullptr &&
         system_item->result.finish_reason == FinishReason::ContentFilter)) {
      ++report.drops_by_reason["content_filter"];
      continue;
    }
    PromptLine line;
    line.id = p.seed->id;
    line.prompt = text::normalize_nfc(prompt_item.result.text);
    if (system_item != nullptr) {
      line.system = text::normalize_nfc(system_item->result.text);
    }
    line.source = p.seed->source;
    lines.push_back(prompt_to_json(line));
  }
  write_or_append_lines(lines, out_path, resuming);
  report.output_count = lines.size();
  return report;
}

StageReport run_answer(const RunConfig& config, ChatBackend& backend,
                       const fs::path& prompts_path, const fs::path& out_path,
                       const std::string& model_name) {
  StageReport report;
  report.stage = "answer";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const std::vector<PromptLine> prompts = load_prompts(prompts_path);
  report.input_count = prompts.size();

  const bool resuming = config.resume && fs::exists(out_path);
  const std::set<std::string> done = resuming ? completed_ids(out_path)
                                              : std::set<std::string>{};

  std::vector<const PromptLine*> pending;
  std::vector<ChatRequest> requests;
  for (const PromptLine& p : prompts) {
    if (done.count(p.id) > 0) {
      ++report.drops_by_reason["already_completed"];
      continue;
    }
    pending.push_back(&p);
    requests.push_back(render_answer_request(p.system, p.prompt));
  }

  std::vector<BatchItem> items =
      run_batch(backend, requests, config.backend.max_in_flight);

  std::vector<Json> lines;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (!items[i].ok) {
      ++report.drops_by_reason["gateway_error"];
      continue;
    }
    if (items[i].result.finish_reason == FinishReason::ContentFilter) {
      ++report.drops_by_reason["content_filter"];
      continue;
    }
    if (text::is_blank(items[i].result.text)) {
      ++report.drops_by_reason["empty_completion"];
      continue;
    }
    Json j;
    j["id"] = pending[i]->id;
    j["model"] = model_name;
    j["text"] = text::normalize_nfc(items[i].result.text);
    lines.push_back(std::move(j));
  }
  write_or_append_lines(lines, out_path, resuming);
  report.output_count = lines.size();
  return report;
}

StageReport run_filter(const RunConfig& config, const fs::path& in_path,
                       const fs::path& out_path) {
  StageReport report;
  report.stage = "filter";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const FileKind kind = sniff_kind(in_path);
  if (kind == FileKind::Conversations) {
    const auto records = load_conversations(in_path);
    auto result = run_filter_pass(records, config.rules);
    write_records(result.kept, out_path);
    report.input_count = result.report.input;
    report.output_count = result.report.kept;
    for (const auto& [rule, count] : result.report.drops_by_rule) {
      report.drops_by_reason[rule] = count;
    }
  } else {
    const auto records = load_pairs(in_path);
    auto result = run_filter_pass(records, config.rules);
    write_records(result.kept, out_path);
    report.input_count = result.report.input;
    report.output_count = result.report.kept;
    for (const auto& [rule, count] : result.report.drops_by_rule) {
      report.drops_by_reason[rule] = count;
    }
  }
  return report;
}

Json candidate_to_json(const PairCandidate& candidate) {
  Json j;
  j["id"] = candidate.id;
  j["system"] = candidate.system ? Json(*candidate.system) : Json(nullptr);
  j["prompt"] = candidate.prompt_nl;
  Json responses = Json::array();
  for (const CandidateResponse& r : candidate.responses) {
    Json rj;
    rj["model"] = r.model;
    rj["text"] = r.text;
    if (r.ratings) {
      Json ratings;
      ratings["dutchness"] = r.ratings->dutchness;
      ratings["helpfulness"] = r.ratings->helpfulness;
      ratings["conciseness"] = r.ratings->conciseness;
      rj["ratings"] = std::move(ratings);
    } else {
      rj["ratings"] = nullptr;
    }
    responses.push_back(std::move(rj));
  }
  j["responses"] = std::move(responses);
  return j;
}

PairCandidate candidate_from_json(const Json& j) {
  PairCandidate c;
  c.id = j.at("id").get<std::string>();
  if (j.contains("system") && !j.at("system").is_null()) {
    c.system = text::normalize_nfc(j.at("system").get<std::string>());
  }
  c.prompt_nl = text::normalize_nfc(j.at("prompt").get<std::string>());
  for (const Json& rj : j.at("responses")) {
    CandidateResponse r;
    r.model = rj.at("model").get<std::string>();
    r.text = text::normalize_nfc(rj.at("text").get<std::string>());
    if (rj.contains("ratings") && !rj.at("ratings").is_null()) {
      RatingSet ratings;
      ratings.dutchness = rj.at("ratings").at("dutchness").get<int>();
      ratings.helpfulness = rj.at("ratings").at("helpfulness").get<int>();
      ratings.conciseness = rj.at("ratings").at("conciseness").get<int>();
      r.ratings = ratings;
    }
    c.responses.push_back(std::move(r));
  }
  return c;
}

namespace {

// Inner join of prompts with exactly one answer per file, by id.
std::vector<PairCandidate> join_candidates(
    const std::vector<PromptLine>& prompts,
    const std::vector<AnswerLine>& answers_a,
    const std::vector<AnswerLine>& answers_b, StageReport& report) {
  std::map<std::string, const AnswerLine*> by_id_a;
  std::map<std::string, const AnswerLine*> by_id_b;
  for (const AnswerLine& a : answers_a) by_id_a.emplace(a.id, &a);
  for (const AnswerLine& b : answers_b) by_id_b.emplace(b.id, &b);

  std::vector<PairCandidate> out;
  for (const PromptLine& p : prompts) {
    auto a = by_id_a.find(p.id);
    auto b = by_id_b.find(p.id);
    if (a == by_id_a.end() || b == by_id_b.end()) {
      ++report.drops_by_reason["missing_response"];
      continue;
    }
    PairCandidate c;
    c.id = p.id;
    c.system = p.system;
    c.prompt_nl = p.prompt;
    c.responses.push_back({a->second->model, a->second->text, std::nullopt});
    c.responses.push_back({b->second->model, b->second->text, std::nullopt});
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

StageReport run_judge(const RunConfig& config, ChatBackend& backend,
                      const fs::path& prompts_path,
                      const fs::path& responses_a_path,
                      const fs::path& responses_b_path,
                      const fs::path& out_path) {
  StageReport report;
  report.stage = "judge";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const auto prompts = load_prompts(prompts_path);
  report.input_count = prompts.size();
  std::vector<PairCandidate> candidates = join_candidates(
      prompts, load_answers(responses_a_path), load_answers(responses_b_path),
      report);

  const bool resuming = config.resume && fs::exists(out_path);
  const std::set<std::string> done = resuming ? completed_ids(out_path)
                                              : std::set<std::string>{};
  std::vector<PairCandidate> pending;
  for (PairCandidate& c : candidates) {
    if (done.count(c.id) > 0) {
      ++report.drops_by_reason["already_completed"];
    } else {
      pending.push_back(std::move(c));
    }
  }

  struct Outcome {
    std::optional<PairCandidate> rated;
    std::string error;
  };
  std::vector<Outcome> outcomes(pending.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(
      1, std::min<int>(config.backend.max_in_flight,
                       static_cast<int>(pending.size())));
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      PairCandidate c = pending[i];
      try {
        for (CandidateResponse& r : c.responses) {
          if (!r.ratings) {
            r.ratings = score_response(c.prompt_nl, r.text, backend,
                                       builtin_criteria(), 2,
                                       config.judge_votes);
          }
        }
        outcomes[i].rated = std::move(c);
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  std::vector<Json> lines;
  for (Outcome& o : outcomes) {
    if (o.rated) {
      lines.push_back(candidate_to_json(*o.rated));
    } else {
      ++report.drops_by_reason["judge_error"];
    }
  }
  write_or_append_lines(lines, out_path, resuming);
  report.output_count = lines.size();
  return report;
}

StageReport run_pair(const RunConfig& config, ChatBackend* backend,
                     DecisionMode mode, const fs::path& candidates_path,
                     const fs::path& out_path,
                     const fs::path& discards_path) {
  StageReport report;
  report.stage = "pair";
  report.seed = config.seed;
  report.config_hash = config.hash();

  std::vector<PairCandidate> candidates;
  for (const Json& j : load_json_lines(candidates_path)) {
    candidates.push_back(candidate_from_json(j));
  }
  report.input_count = candidates.size();

  PairBuildResult result =
      build_pairs(candidates, mode, config.thresholds, backend,
                  config.backend.max_in_flight, config.judge_votes);

  write_records(result.pairs, out_path);
  std::vector<Json> discard_lines;
  for (const DiscardRecord& d : result.discards) {
    Json j;
    j["id"] = d.id;
    j["reason"] = d.reason;
    j["avg_a"] = d.avg_a ? Json(*d.avg_a) : Json(nullptr);
    j["avg_b"] = d.avg_b ? Json(*d.avg_b) : Json(nullptr);
    j["gap"] = d.gap ? Json(*d.gap) : Json(nullptr);
    discard_lines.push_back(std::move(j));
    // Bucket by the reason's head so gateway error strings do not fan out.
    std::string reason = d.reason;
    if (auto colon = reason.find(':'); colon != std::string::npos) {
      reason.resize(colon);
    }
    ++report.drops_by_reason[reason];
  }
  write_json_lines(discard_lines, discards_path);
  report.output_count = result.pairs.size();
  return report;
}

StageReport run_mix(const RunConfig& config, const fs::path& manifest_path,
                    const fs::path& out_path,
                    const fs::path& mix_report_path) {
  StageReport report;
  report.stage = "mix";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const DatasetManifest manifest = load_manifest(manifest_path);
  MixResult result = mix_datasets(manifest, config.seed);
  write_json_lines(result.records, out_path);
  write_text_file(mix_report_path, result.report_json().dump(2) + "\n");

  for (const MixEntryReport& e : result.entries) {
    report.input_count += e.available;
    if (e.available > e.selected) {
      report.drops_by_reason["not_sampled"] += e.available - e.selected;
    }
  }
  report.output_count = result.records.size();
  return report;
}

StageReport run_split(const RunConfig& config, const fs::path& in_path,
                      const fs::path& train_path, const fs::path& test_path,
                      double test_ratio) {
  StageReport report;
  report.stage = "split";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const std::vector<Json> records = load_json_lines(in_path);
  report.input_count = records.size();
  SplitResult result = split_dataset(records, test_ratio, config.seed);
  write_json_lines(result.train, train_path);
  write_json_lines(result.test, test_path);
  report.output_count = result.train.size() + result.test.size();
  return report;
}

StageReport run_dedup(const RunConfig& config, const fs::path& in_path,
                      const fs::path& out_path) {
  StageReport report;
  report.stage = "dedup";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const FileKind kind = sniff_kind(in_path);
  if (kind == FileKind::Conversations) {
    const auto records = load_conversations(in_path);
    report.input_count = records.size();
    auto result = dedup_exact(records);
    write_records(result.kept, out_path);
    report.output_count = result.kept.size();
    if (result.removed > 0) report.drops_by_reason["duplicate"] = result.removed;
  } else {
    const auto records = load_pairs(in_path);
    report.input_count = records.size();
    auto result = dedup_exact(records);
    write_records(result.kept, out_path);
    report.output_count = result.kept.size();
    if (result.removed > 0) report.drops_by_reason["duplicate"] = result.removed;
  }
  return report;
}

StageReport run_stats(const RunConfig& config, const fs::path& in_path,
                      const fs::path& out_path) {
  StageReport report;
  report.stage = "stats";
  report.seed = config.seed;
  report.config_hash = config.hash();

  const FileKind kind = sniff_kind(in_path);
  TokenStats stats;
  if (kind == FileKind::Conversations) {
    const auto records = load_conversations(in_path);
    report.input_count = records.size();
    stats = token_stats(records);
  } else {
    const auto records = load_pairs(in_path);
    report.input_count = records.size();
    stats = token_stats(records);
  }
  write_text_file(out_path, stats.to_json().dump(2) + "\n");
  report.output_count = report.input_count;
  return report;
}

StageReport run_recipe(const RunConfig& config, RecipeKind kind,
                       const fs::path& out_path) {
  StageReport report;
  report.stage = "recipe";
  report.seed = config.seed;
  report.config_hash = config.hash();

  EmittedRecipe emitted = emit_training_recipe(kind);
  // The document must parse back to the same recipe before it leaves.
  if (parse_recipe_document(emitted.document) != emitted.recipe) {
    throw RecipeParseError("emitted document does not round-trip");
  }
  write_text_file(out_path, emitted.document);
  report.input_count = 1;
  report.output_count = 1;
  return report;
}

}  // namespace polder
