#include <doctest.h>

#include <polder/records.hpp>

#include <random>

#include "support/generators.hpp"

using namespace polder;

namespace {

Conversation make(std::initializer_list<Turn> turns) {
  Conversation c;
  c.id = "t";
  c.turns = turns;
  return c;
}

}  // namespace

TEST_CASE("minimal valid conversation has no violations") {
  auto v = validate_conversation(
      make({{Role::User, "hoi"}, {Role::Assistant, "hallo"}}));
  CHECK(v.empty());
}

TEST_CASE("system turn allowed only at position 0") {
  auto ok = validate_conversation(make({{Role::System, "wees kort"},
                                        {Role::User, "hoi"},
                                        {Role::Assistant, "hallo"}}));
  CHECK(ok.empty());

  auto bad = validate_conversation(make({{Role::User, "hoi"},
                                         {Role::System, "laat"},
                                         {Role::Assistant, "hallo"}}));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().kind == ViolationKind::SystemTurnMisplaced);
  CHECK(bad.front().turn_index == 1);
}

TEST_CASE("assistant-first conversation yields FirstTurnNotUser(0)") {
  auto v = validate_conversation(make({{Role::Assistant, "hallo"}}));
  REQUIRE(v.size() == 1);
  CHECK(v.front().kind == ViolationKind::FirstTurnNotUser);
  CHECK(v.front().turn_index == 0);
}

TEST_CASE("double user turn yields AlternationBroken(1)") {
  auto v = validate_conversation(make(
      {{Role::User, "a"}, {Role::User, "b"}, {Role::Assistant, "c"}}));
  REQUIRE(v.size() == 1);
  CHECK(v.front().kind == ViolationKind::AlternationBroken);
  CHECK(v.front().turn_index == 1);
}

TEST_CASE("empty conversation and whitespace turns are flagged") {
  auto empty = validate_conversation(make({}));
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().kind == ViolationKind::EmptyConversation);

  auto blank = validate_conversation(
      make({{Role::User, "  \n"}, {Role::Assistant, "hallo"}}));
  REQUIRE_FALSE(blank.empty());
  CHECK(blank.front().kind == ViolationKind::EmptyTurn);
  CHECK(blank.front().turn_index == 0);
}

TEST_CASE("conversation must end on assistant") {
  auto v = validate_conversation(
      make({{Role::User, "a"}, {Role::Assistant, "b"}, {Role::User, "c"}}));
  REQUIRE(v.size() == 1);
  CHECK(v.front().kind == ViolationKind::LastTurnNotAssistant);
  CHECK(v.front().turn_index == 2);
}

TEST_CASE("preference pair invariants") {
  PreferencePair p;
  p.id = "p";
  p.prompt_nl = "vraag";
  p.chosen = "antwoord een";
  p.rejected = "antwoord twee";
  p.chosen_model = "a";
  p.rejected_model = "b";
  p.decision_mode = DecisionMode::Naive;
  CHECK(validate_pair(p).empty());

  SUBCASE("identical responses after trim") {
    p.rejected = "  antwoord een  ";
    auto v = validate_pair(p);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == ViolationKind::IdenticalResponses);
  }
  SUBCASE("same model on both sides") {
    p.rejected_model = "a";
    auto v = validate_pair(p);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == ViolationKind::IdenticalModels);
  }
  SUBCASE("judged mode requires both rating sets") {
    p.decision_mode = DecisionMode::Judged;
    p.chosen_ratings = RatingSet{4, 4, 4};
    auto v = validate_pair(p);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == ViolationKind::MissingRatings);
  }
  SUBCASE("ratings outside 1..5 are rejected") {
    p.chosen_ratings = RatingSet{0, 4, 4};
    auto v = validate_pair(p);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == ViolationKind::RatingOutOfRange);
  }
}

TEST_CASE("property: validation accepts generated valid conversations and "
          "flags mutated ones") {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> mutation(0, 3);
  for (std::size_t i = 0; i < 300; ++i) {
    Conversation c = gen::conversation(rng, i);
    CHECK(validate_conversation(c).empty());

    Conversation broken = c;
    switch (mutation(rng)) {
      case 0:  // duplicate a turn: breaks alternation
        broken.turns.insert(broken.turns.begin(), broken.turns.front());
        break;
      case 1:  // system turn in the middle
        broken.turns.insert(broken.turns.begin() + 1,
                            Turn{Role::System, "te laat"});
        break;
      case 2:  // blank out a turn
        broken.turns[broken.turns.size() / 2].content = "   ";
        break;
      case 3:  // drop the final assistant turn
        broken.turns.pop_back();
        break;
    }
    CHECK_FALSE(validate_conversation(broken).empty());
  }
}

TEST_CASE("rating average is exact thirds arithmetic") {
  CHECK(RatingSet{4, 5, 3}.average() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(RatingSet{5, 5, 5}.average() == 5.0);
  CHECK(RatingSet{4, 4, 4}.average() == 4.0);
}
