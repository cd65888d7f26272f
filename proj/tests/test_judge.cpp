#include <doctest.h>

#include <polder/judge.hpp>

#include <random>

#include "support/oracles.hpp"

using namespace polder;

namespace {

ScoreTriple triple(const std::array<double, 3>& a) {
  return ScoreTriple{a[0], a[1], a[2]};
}

// A backend that replays a scripted list of judge replies.
class ScriptedBackend final : public ChatBackend {
 public:
  explicit ScriptedBackend(std::vector<std::string> replies)
      : replies_(std::move(replies)) {}

  CompletionResult complete(const ChatRequest&) override {
    CompletionResult r;
    r.text = replies_[std::min(next_, replies_.size() - 1)];
    ++next_;
    return r;
  }

  std::size_t calls() const { return next_; }

 private:
  std::vector<std::string> replies_;
  std::size_t next_ = 0;
};

}  // namespace

TEST_CASE("decide_naive keeps the reference response") {
  PairDecision d = decide_naive("antwoord van referentie", "ander antwoord");
  CHECK(d.outcome == PairDecision::Outcome::Keep);
  CHECK(d.chosen_index == 0);
  CHECK(d.mode == DecisionMode::Naive);
}

TEST_CASE("decide_naive discards identical responses as degenerate") {
  PairDecision d = decide_naive("zelfde tekst", "  zelfde tekst  ");
  CHECK(d.outcome == PairDecision::Outcome::Discard);
  CHECK(d.discard_reason == "EmptyPairDegenerate");
}

TEST_CASE("decide_naive rejects empty responses") {
  CHECK_THROWS_AS(decide_naive("", "iets"), EmptyResponseError);
  CHECK_THROWS_AS(decide_naive("iets", "   "), EmptyResponseError);
}

TEST_CASE("decide_cleaned worked examples") {
  const CleanedThresholds t;
  SUBCASE("straddling keep: (5,4,4) vs (4,4,4)") {
    PairDecision d = decide_cleaned(RatingSet{5, 4, 4}, RatingSet{4, 4, 4}, 0, t);
    CHECK(d.outcome == PairDecision::Outcome::Keep);
    CHECK(d.chosen_index == 0);  // avg 4.333 vs 4.0, gap 1/3 in [0.25, 2.0]
  }
  SUBCASE("zero gap discards") {
    PairDecision d = decide_cleaned(RatingSet{4, 4, 4}, RatingSet{4, 4, 4}, 0, t);
    CHECK(d.outcome == PairDecision::Outcome::Discard);
    CHECK(d.discard_reason == "gap_too_small");
  }
  SUBCASE("criterion 3 < 3.5 discards despite a high average") {
    PairDecision d = decide_cleaned(RatingSet{5, 5, 5}, RatingSet{5, 5, 3}, 0, t);
    CHECK(d.outcome == PairDecision::Outcome::Discard);
    CHECK(d.discard_reason == "criterion_below_min");
  }
  SUBCASE("average below 4.0 discards") {
    PairDecision d = decide_cleaned(RatingSet{4, 4, 3}, RatingSet{5, 5, 5}, 0, t);
    CHECK(d.outcome == PairDecision::Outcome::Discard);
    CHECK(d.discard_reason == "below_avg_floor");
  }
}

TEST_CASE("boundary semantics are inclusive exactly as worded") {
  const CleanedThresholds t;
  // avg exactly 4.0 on both, gap manufactured via non-integer ratings
  SUBCASE("avg 4.0 passes the floor") {
    PairDecision d =
        decide_cleaned(triple({4.25, 4.25, 4.25}), triple({4, 4, 4}), 0, t);
    CHECK(d.outcome == PairDecision::Outcome::Keep);  // gap exactly 0.25
    CHECK(d.chosen_index == 0);
  }
  SUBCASE("criterion exactly 3.5 is not below 3.5") {
    PairDecision d =
        decide_cleaned(triple({3.5, 4.5, 4.75}), triple({4, 4, 4}), 0, t);
    // avg_a = 4.25, all criteria >= 3.5, gap 0.25
    CHECK(d.outcome == PairDecision::Outcome::Keep);
  }
  SUBCASE("gap 0.24 discards, 0.25 keeps") {
    CHECK(decide_cleaned(triple({4.24, 4.24, 4.24}), triple({4, 4, 4}), 0, t)
              .outcome == PairDecision::Outcome::Discard);
    CHECK(decide_cleaned(triple({4.25, 4.25, 4.25}), triple({4, 4, 4}), 0, t)
              .outcome == PairDecision::Outcome::Keep);
  }
  SUBCASE("gap 2.0 keeps, 2.01 discards") {
    // lower side must stay >= 4.0 for the gap rule to be reached
    CHECK(decide_cleaned(triple({4, 4, 4}), triple({5, 5, 5}), 0, t).outcome ==
          PairDecision::Outcome::Keep);  // gap 1.0
    CHECK(decide_cleaned(triple({4.0, 4.0, 4.0}), triple({6.0, 6.0, 6.0}), 0, t)
              .outcome == PairDecision::Outcome::Keep);  // gap exactly 2.0
    CHECK(decide_cleaned(triple({4.0, 4.0, 4.0}),
                         triple({6.01, 6.01, 6.01}), 0, t)
              .outcome == PairDecision::Outcome::Discard);
  }
  SUBCASE("exact tie goes to the reference index") {
    CleanedThresholds zero_gap = t;
    zero_gap.min_gap = 0.0;
    PairDecision a =
        decide_cleaned(triple({4, 4, 4}), triple({4, 4, 4}), 0, zero_gap);
    CHECK(a.outcome == PairDecision::Outcome::Keep);
    CHECK(a.chosen_index == 0);
    PairDecision b =
        decide_cleaned(triple({4, 4, 4}), triple({4, 4, 4}), 1, zero_gap);
    CHECK(b.chosen_index == 1);
  }
}

TEST_CASE("oracle sweep: integer triples vs brute-force evaluator") {
  const CleanedThresholds t;
  const auto triples = oracle::all_integer_triples();
  REQUIRE(triples.size() == 125);

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);

  std::size_t mismatches = 0;
  std::size_t cases = 0;
  for (const auto& a : triples) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto& b = triples[pick(rng)];
      const auto expected = oracle::cleaned_rules(a, b, 0);
      const PairDecision actual = decide_cleaned(triple(a), triple(b), 0, t);
      const bool keep = actual.outcome == PairDecision::Outcome::Keep;
      if (keep != expected.keep ||
          (keep && actual.chosen_index != expected.chosen)) {
        ++mismatches;
      }
      ++cases;
    }
  }
  CHECK(cases == 500);
  CHECK(mismatches == 0);
}

TEST_CASE("swap symmetry") {
  const CleanedThresholds t;
  const auto triples = oracle::all_integer_triples();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto& a = triples[pick(rng)];
    const auto& b = triples[pick(rng)];
    const PairDecision fwd = decide_cleaned(triple(a), triple(b), 0, t);
    const PairDecision rev = decide_cleaned(triple(b), triple(a), 1, t);
    CHECK((fwd.outcome == PairDecision::Outcome::Keep) ==
          (rev.outcome == PairDecision::Outcome::Keep));
    if (fwd.outcome == PairDecision::Outcome::Keep) {
      // same winning response regardless of argument order
      CHECK(fwd.chosen_index == 1 - rev.chosen_index);
    }
  }
}

TEST_CASE("score_response parses one rating per criterion") {
  ScriptedBackend backend({"<rating>4</rating>", "<rating>5</rating>",
                           "<rating>3</rating>"});
  RatingSet r = score_response("vraag", "antwoord", backend,
                               builtin_criteria());
  CHECK(r.dutchness == 4);
  CHECK(r.helpfulness == 5);
  CHECK(r.conciseness == 3);
  CHECK(r.average() == doctest::Approx(4.0));
  CHECK(backend.calls() == 3);
}

TEST_CASE("score_response retries unparseable replies, then fails") {
  SUBCASE("recovers on retry") {
    ScriptedBackend backend({"<rating>0</rating>", "<rating>4</rating>",
                             "<rating>4</rating>", "<rating>4</rating>"});
    RatingSet r = score_response("v", "a", backend, builtin_criteria());
    CHECK(r.dutchness == 4);
    CHECK(backend.calls() == 4);  // one extra call for the retry
  }
  SUBCASE("persistent garbage raises JudgeUnparseableError") {
    ScriptedBackend backend({"geen tag"});
    CHECK_THROWS_AS(score_response("v", "a", backend, builtin_criteria()),
                    JudgeUnparseableError);
    CHECK(backend.calls() == 3);  // initial attempt + 2 retries
  }
}

TEST_CASE("score_response majority-of-three takes the median") {
  ScriptedBackend backend({
      "<rating>3</rating>", "<rating>5</rating>", "<rating>4</rating>",  // d
      "<rating>5</rating>", "<rating>5</rating>", "<rating>2</rating>",  // h
      "<rating>1</rating>", "<rating>1</rating>", "<rating>3</rating>",  // c
  });
  RatingSet r = score_response("v", "a", backend, builtin_criteria(),
                               /*retries=*/2, /*votes=*/3);
  CHECK(r.dutchness == 4);
  CHECK(r.helpfulness == 5);
  CHECK(r.conciseness == 1);
  CHECK(backend.calls() == 9);
}

TEST_CASE("build_pairs in judged mode") {
  const CleanedThresholds t;
  std::vector<PairCandidate> candidates;
  auto add = [&](const std::string& id, RatingSet ra, RatingSet rb) {
    PairCandidate c;
    c.id = id;
    c.prompt_nl = "Leg het verschil uit tussen een dijk en een duin.";
    c.responses = {{"model-a", "Antwoord van model a over " + id, ra},
                   {"model-b", "Antwoord van model b over " + id, rb}};
    candidates.push_back(std::move(c));
  };
  add("keep-1", RatingSet{5, 4, 4}, RatingSet{4, 4, 4});   // keep, a wins
  add("floor", RatingSet{3, 4, 4}, RatingSet{5, 5, 5});    // below 4.0
  add("keep-2", RatingSet{4, 4, 4}, RatingSet{5, 4, 5});   // keep, b wins

  PairBuildResult result = build_pairs(candidates, DecisionMode::Judged, t);
  REQUIRE(result.pairs.size() == 2);
  REQUIRE(result.discards.size() == 1);
  CHECK(result.discards[0].id == "floor");
  CHECK(result.discards[0].reason == "below_avg_floor");
  REQUIRE(result.discards[0].gap.has_value());

  const PreferencePair& first = result.pairs[0];
  CHECK(first.id == "keep-1");
  CHECK(first.chosen_model == "model-a");
  CHECK(first.decision_mode == DecisionMode::Judged);
  REQUIRE(first.chosen_ratings.has_value());
  CHECK(first.chosen_ratings->average() >= first.rejected_ratings->average());

  const PreferencePair& second = result.pairs[1];
  CHECK(second.id == "keep-2");
  CHECK(second.chosen_model == "model-b");
  CHECK(validate_pair(first).empty());
  CHECK(validate_pair(second).empty());
}

TEST_CASE("build_pairs naive mode never touches a backend") {
  std::vector<PairCandidate> candidates;
  PairCandidate c;
  c.id = "n1";
  c.prompt_nl = "Schrijf een groet.";
  c.responses = {{"ref-model", "Hartelijke groeten uit het noorden!", {}},
                 {"other-model", "Groetjes!", {}}};
  candidates.push_back(c);

  // No backend given: naive mode must not need one.
  PairBuildResult result =
      build_pairs(candidates, DecisionMode::Naive, CleanedThresholds{});
  REQUIRE(result.pairs.size() == 1);
  CHECK(result.pairs[0].chosen_model == "ref-model");
  CHECK(result.pairs[0].decision_mode == DecisionMode::Naive);
  CHECK_FALSE(result.pairs[0].chosen_ratings.has_value());
}

TEST_CASE("build_pairs skips broken records without aborting") {
  std::vector<PairCandidate> candidates;
  PairCandidate only_one;
  only_one.id = "short";
  only_one.prompt_nl = "p";
  only_one.responses = {{"a", "x", {}}};
  candidates.push_back(only_one);

  PairCandidate same_text;
  same_text.id = "same";
  same_text.prompt_nl = "p";
  same_text.responses = {{"a", "identiek antwoord", {}},
                         {"b", "identiek antwoord", {}}};
  candidates.push_back(same_text);

  PairCandidate good;
  good.id = "ok";
  good.prompt_nl = "p";
  good.responses = {{"a", "eerste echte antwoord", {}},
                    {"b", "tweede echte antwoord", {}}};
  candidates.push_back(good);

  PairBuildResult result =
      build_pairs(candidates, DecisionMode::Naive, CleanedThresholds{});
  CHECK(result.pairs.size() == 1);
  REQUIRE(result.discards.size() == 2);
  CHECK(result.discards[0].reason == "wrong_response_count");
  CHECK(result.discards[1].reason == "EmptyPairDegenerate");
}

TEST_CASE("judged mode without ratings and without backend is an error") {
  std::vector<PairCandidate> candidates;
  PairCandidate c;
  c.id = "x";
  c.prompt_nl = "p";
  c.responses = {{"a", "een", {}}, {"b", "twee", {}}};
  candidates.push_back(c);
  CHECK_THROWS_AS(
      build_pairs(candidates, DecisionMode::Judged, CleanedThresholds{}),
      std::invalid_argument);
}
