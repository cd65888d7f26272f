// polder: batch pipeline for building synthetic Dutch conversational
// datasets (SFT + preference pairs) against OpenAI-compatible backends.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polder/pipeline.hpp"

namespace {

namespace fs = std::filesystem;
using polder::RunConfig;
using polder::StageReport;

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> backend_kind;
  std::optional<std::string> persona_table;
  bool resume = false;
  std::string report_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_backend = true) {
  cmd->add_option("--config", args.config_path, "Run config JSON")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", args.seed, "Run seed (overrides config)");
  cmd->add_option("--report", args.report_path,
                  "Stage report path (default: <out>.report.json)");
  if (with_backend) {
    args.backend_kind.reset();
    cmd->add_option("--backend", args.backend_kind, "Backend kind")
        ->check(CLI::IsMember({"wire", "mock"}));
    cmd->add_flag("--resume", args.resume,
                  "Skip records whose ids are already in the output file");
  }
}

RunConfig effective_config(const CommonArgs& args) {
  RunConfig config;
  if (!args.config_path.empty()) {
    config = polder::load_run_config(args.config_path);
  }
  if (args.seed) config.seed = *args.seed;
  if (args.backend_kind) config.backend_kind = *args.backend_kind;
  if (args.persona_table) config.persona_table_path = *args.persona_table;
  if (args.resume) config.resume = true;
  return config;
}

// Raised for malformed invocations that CLI11 cannot see (missing or
// dangling paths resolved through config.paths); mapped to exit 2.
struct UsageExit {
  std::string message;
};

std::string need_path(const RunConfig& config, const std::string& flag_value,
                      const std::string& key, bool must_exist) {
  std::string path = flag_value;
  if (path.empty()) {
    auto it = config.paths.find(key);
    if (it == config.paths.end()) {
      throw UsageExit{"missing path: give --" + key + " or config.paths." +
                      key};
    }
    path = it->second;
  }
  if (must_exist && !fs::exists(path)) {
    throw UsageExit{"--" + key + ": file does not exist: " + path};
  }
  return path;
}

int finish(const StageReport& report, const CommonArgs& args,
           const std::string& out_path) {
  const std::string report_path = args.report_path.empty()
                                      ? out_path + ".report.json"
                                      : args.report_path;
  report.write(report_path);
  if (!report.reconciles()) {
    std::cerr << "error: report counts do not reconcile for stage "
              << report.stage << "\n";
    return 1;
  }
  std::size_t drops = 0;
  for (const auto& [reason, count] : report.drops_by_reason) drops += count;
  std::cout << report.stage << ": input=" << report.input_count
            << " output=" << report.output_count << " drops=" << drops
            << " -> " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polder: synthetic Dutch conversational dataset pipeline"};
  app.require_subcommand(1);

  // generate
  CommonArgs gen_args;
  std::string gen_seeds, gen_out;
  auto* gen = app.add_subcommand(
      "generate", "Persona-conditioned self-chat conversations from seeds");
  gen->add_option("--seeds", gen_seeds, "Seed JSONL");
  gen->add_option("--out", gen_out, "SFT JSONL output");
  gen->add_option("--persona-table", gen_args.persona_table,
                  "Persona table override JSON");
  add_common(gen, gen_args);

  // translate
  CommonArgs tr_args;
  std::string tr_seeds, tr_out;
  auto* tr = app.add_subcommand("translate",
                                "Translate seed prompts (and system "
                                "messages) to Dutch");
  tr->add_option("--seeds", tr_seeds, "Seed JSONL");
  tr->add_option("--out", tr_out, "Prompt JSONL output");
  add_common(tr, tr_args);

  // answer
  CommonArgs ans_args;
  std::string ans_in, ans_out, ans_model;
  auto* ans = app.add_subcommand("answer",
                                 "Answer Dutch prompts with one model");
  ans->add_option("--in", ans_in, "Prompt JSONL");
  ans->add_option("--out", ans_out, "Answer JSONL output");
  ans->add_option("--model-name", ans_model,
                  "Model label recorded on answers (default: config)");
  add_common(ans, ans_args);

  // filter
  CommonArgs fil_args;
  std::string fil_in, fil_out, fil_rules;
  auto* fil = app.add_subcommand(
      "filter", "Language / non-Latin / banned-phrase filtering");
  fil->add_option("--in", fil_in, "Conversations or pairs JSONL");
  fil->add_option("--out", fil_out, "Kept records output");
  fil->add_option("--rules", fil_rules, "Rule set JSON override")
      ->check(CLI::ExistingFile);
  add_common(fil, fil_args, /*with_backend=*/false);

  // judge
  CommonArgs jud_args;
  std::string jud_prompts, jud_out;
  std::vector<std::string> jud_responses;
  auto* jud = app.add_subcommand(
      "judge", "Rate two models' responses per criterion");
  jud->add_option("--prompts", jud_prompts, "Prompt JSONL");
  jud->add_option("--responses", jud_responses,
                  "Answer JSONL (give twice: model A, model B)")
      ->expected(2);
  jud->add_option("--out", jud_out, "Rated candidate JSONL output");
  add_common(jud, jud_args);

  // pair
  CommonArgs pair_args;
  std::string pair_in, pair_out, pair_discards, pair_mode = "judged";
  auto* pair = app.add_subcommand(
      "pair", "Chosen/rejected preference pairs from candidates");
  pair->add_option("--in", pair_in, "Candidate JSONL (from judge)");
  pair->add_option("--out", pair_out, "Preference JSONL output");
  pair->add_option("--discards", pair_discards,
                   "Discard log JSONL (default: <out>.discards.jsonl)");
  pair->add_option("--mode", pair_mode, "Selection rule")
      ->check(CLI::IsMember({"naive", "judged"}));
  add_common(pair, pair_args);

  // mix
  CommonArgs mix_args;
  std::string mix_manifest, mix_in, mix_out, mix_report;
  double mix_fraction = 1.0;
  auto* mix = app.add_subcommand("mix",
                                 "Mix datasets by manifest fractions");
  mix->add_option("--manifest", mix_manifest, "Dataset manifest JSON")
      ->check(CLI::ExistingFile);
  mix->add_option("--in", mix_in,
                  "Single input JSONL (alternative to --manifest)")
      ->check(CLI::ExistingFile);
  mix->add_option("--fraction", mix_fraction,
                  "Fraction for --in (0,1]")
      ->check(CLI::Range(0.0, 1.0));
  mix->add_option("--out", mix_out, "Mixed JSONL output");
  mix->add_option("--mix-report", mix_report,
                  "Proportions report (default: <out>.mix.json)");
  add_common(mix, mix_args, /*with_backend=*/false);

  // split
  CommonArgs spl_args;
  std::string spl_in, spl_train, spl_test;
  double spl_ratio = 0.1;
  auto* spl = app.add_subcommand("split", "Deterministic train/test split");
  spl->add_option("--in", spl_in, "Input JSONL");
  spl->add_option("--train", spl_train, "Train output");
  spl->add_option("--test", spl_test, "Test output");
  spl->add_option("--test-ratio", spl_ratio, "Test share in [0,1)")
      ->check(CLI::Range(0.0, 1.0));
  add_common(spl, spl_args, /*with_backend=*/false);

  // dedup
  CommonArgs ded_args;
  std::string ded_in, ded_out;
  auto* ded = app.add_subcommand("dedup", "Exact deduplication");
  ded->add_option("--in", ded_in, "Input JSONL");
  ded->add_option("--out", ded_out, "Deduplicated output");
  add_common(ded, ded_args, /*with_backend=*/false);

  // stats
  CommonArgs sta_args;
  std::string sta_in, sta_out;
  auto* sta = app.add_subcommand("stats", "Token statistics (pre-template)");
  sta->add_option("--in", sta_in, "Input JSONL");
  sta->add_option("--out", sta_out, "Stats JSON output");
  add_common(sta, sta_args, /*with_backend=*/false);

  // recipe
  CommonArgs rec_args;
  std::string rec_kind, rec_out;
  auto* rec = app.add_subcommand("recipe", "Emit a training recipe document");
  rec->add_option("--kind", rec_kind, "Recipe kind")
      ->required()
      ->check(CLI::IsMember({"sft", "dpo"}));
  rec->add_option("--out", rec_out, "Recipe document output");
  add_common(rec, rec_args, /*with_backend=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      RunConfig config = effective_config(gen_args);
      const std::string seeds = need_path(config, gen_seeds, "seeds", true);
      const std::string out = need_path(config, gen_out, "out", false);
      auto backend = polder::make_backend(config);
      return finish(polder::run_generate(config, *backend, seeds, out),
                    gen_args, out);
    }
    if (tr->parsed()) {
      RunConfig config = effective_config(tr_args);
      const std::string seeds = need_path(config, tr_seeds, "seeds", true);
      const std::string out = need_path(config, tr_out, "out", false);
      auto backend = polder::make_backend(config);
      return finish(polder::run_translate(config, *backend, seeds, out),
                    tr_args, out);
    }
    if (ans->parsed()) {
      RunConfig config = effective_config(ans_args);
      const std::string in = need_path(config, ans_in, "in", true);
      const std::string out = need_path(config, ans_out, "out", false);
      auto backend = polder::make_backend(config);
      const std::string model =
          ans_model.empty() ? config.backend.model_name : ans_model;
      return finish(polder::run_answer(config, *backend, in, out, model),
                    ans_args, out);
    }
    if (fil->parsed()) {
      RunConfig config = effective_config(fil_args);
      if (!fil_rules.empty()) config.rules = polder::load_rules(fil_rules);
      const std::string in = need_path(config, fil_in, "in", true);
      const std::string out = need_path(config, fil_out, "out", false);
      return finish(polder::run_filter(config, in, out), fil_args, out);
    }
    if (jud->parsed()) {
      RunConfig config = effective_config(jud_args);
      const std::string prompts =
          need_path(config, jud_prompts, "prompts", true);
      const std::string responses_a = need_path(
          config, jud_responses.size() > 0 ? jud_responses[0] : "",
          "responses_a", true);
      const std::string responses_b = need_path(
          config, jud_responses.size() > 1 ? jud_responses[1] : "",
          "responses_b", true);
      const std::string out = need_path(config, jud_out, "out", false);
      auto backend = polder::make_backend(config);
      return finish(polder::run_judge(config, *backend, prompts, responses_a,
                                      responses_b, out),
                    jud_args, out);
    }
    if (pair->parsed()) {
      RunConfig config = effective_config(pair_args);
      const auto mode = polder::decision_mode_from_name(pair_mode);
      const std::string in = need_path(config, pair_in, "in", true);
      const std::string out = need_path(config, pair_out, "out", false);
      std::unique_ptr<polder::ChatBackend> backend;
      if (*mode == polder::DecisionMode::Judged) {
        backend = polder::make_backend(config);
      }
      const std::string discards =
          pair_discards.empty() ? out + ".discards.jsonl" : pair_discards;
      return finish(polder::run_pair(config, backend.get(), *mode, in, out,
                                     discards),
                    pair_args, out);
    }
    if (mix->parsed()) {
      RunConfig config = effective_config(mix_args);
      const std::string out = need_path(config, mix_out, "out", false);
      std::string manifest_path = mix_manifest;
      if (manifest_path.empty() && config.paths.count("manifest") > 0) {
        manifest_path = config.paths.at("manifest");
      }
      if (manifest_path.empty()) {
        if (mix_in.empty()) {
          throw UsageExit{"mix: give --manifest or --in"};
        }
        // Build a single-entry manifest on the fly for --in/--fraction.
        polder::Json m;
        m["entries"] = polder::Json::array(
            {{{"path", mix_in}, {"fraction", mix_fraction}, {"name", mix_in}}});
        manifest_path = out + ".manifest.json";
        polder::write_text_file(manifest_path, m.dump(2) + "\n");
      }
      const std::string report_path =
          mix_report.empty() ? out + ".mix.json" : mix_report;
      return finish(polder::run_mix(config, manifest_path, out, report_path),
                    mix_args, out);
    }
    if (spl->parsed()) {
      RunConfig config = effective_config(spl_args);
      if (spl_ratio >= 1.0) {
        throw UsageExit{"split: --test-ratio must be in [0,1)"};
      }
      const std::string in = need_path(config, spl_in, "in", true);
      const std::string train = need_path(config, spl_train, "train", false);
      const std::string test = need_path(config, spl_test, "test", false);
      return finish(polder::run_split(config, in, train, test, spl_ratio),
                    spl_args, train);
    }
    if (ded->parsed()) {
      RunConfig config = effective_config(ded_args);
      const std::string in = need_path(config, ded_in, "in", true);
      const std::string out = need_path(config, ded_out, "out", false);
      return finish(polder::run_dedup(config, in, out), ded_args, out);
    }
    if (sta->parsed()) {
      RunConfig config = effective_config(sta_args);
      const std::string in = need_path(config, sta_in, "in", true);
      const std::string out = need_path(config, sta_out, "out", false);
      return finish(polder::run_stats(config, in, out), sta_args, out);
    }
    if (rec->parsed()) {
      RunConfig config = effective_config(rec_args);
      const std::string out = need_path(config, rec_out, "out", false);
      const auto kind = rec_kind == "sft" ? polder::RecipeKind::Sft
                                          : polder::RecipeKind::Dpo;
      return finish(polder::run_recipe(config, kind, out), rec_args, out);
    }
  } catch (const UsageExit& e) {
    std::cerr << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
