#include <benchmark/benchmark.h>

#include <polder/dataset_ops.hpp>
#include <polder/filters.hpp>
#include <polder/gateway.hpp>
#include <polder/lang_id.hpp>
#include <polder/personas.hpp>
#include <polder/transcript.hpp>

#include <random>

using namespace polder;

namespace {

// One mock self-chat transcript is enough to exercise parse/filter paths.
std::string sample_transcript() {
  auto backend = make_mock_backend(7);
  ChatRequest req;
  req.messages = {{Role::User, "benchmark seed"}};
  req.purpose = Purpose::Generate;
  return backend->complete(req).text;
}

Conversation sample_conversation() {
  return parse_transcript({sample_transcript(), "bench", "expert"});
}

}  // namespace

static void BM_SamplePersona(benchmark::State& state) {
  const PersonaTable& table = builtin_table();
  std::mt19937_64 rng(42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_persona(table, rng).probability);
  }
}
BENCHMARK(BM_SamplePersona);

static void BM_ParseTranscript(benchmark::State& state) {
  const std::string text = sample_transcript();
  for (auto _ : state) {
    Conversation c = parse_transcript({text, "bench", "expert"});
    benchmark::DoNotOptimize(c.turns.size());
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(text.size()));
}
BENCHMARK(BM_ParseTranscript);

static void BM_DetectLanguage(benchmark::State& state) {
  const std::string text =
      "De fietsenmaker aan het plein repareert al dertig jaar banden, "
      "kettingen en versnellingen voor het hele dorp.";
  // First call builds the profiles; keep that out of the loop.
  detect_language(text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_language(text).confidence);
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(text.size()));
}
BENCHMARK(BM_DetectLanguage);

static void BM_EvaluateRecord(benchmark::State& state) {
  const FilterRuleSet rules = FilterRuleSet::defaults();
  const Conversation conv = sample_conversation();
  detect_language("warmlopen voor de taalprofielen van de detector hier");
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_record(conv, rules).keep);
  }
}
BENCHMARK(BM_EvaluateRecord);

static void BM_RenderChatTemplate(benchmark::State& state) {
  const ChatTemplate zephyr = ChatTemplate::zephyr();
  const Conversation conv = sample_conversation();
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_chat_template(conv, zephyr, true).size());
  }
}
BENCHMARK(BM_RenderChatTemplate);

static void BM_MockCompletion(benchmark::State& state) {
  auto backend = make_mock_backend(11);
  ChatRequest req;
  req.messages = {{Role::User, "Leg uit hoe zonnepanelen werken."}};
  req.purpose = Purpose::Generate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(backend->complete(req).text.size());
  }
}
BENCHMARK(BM_MockCompletion);

BENCHMARK_MAIN();
