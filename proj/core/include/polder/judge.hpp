#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polder/gateway.hpp"
#include "polder/prompts.hpp"
#include "polder/records.hpp"

namespace polder {

// Criterion scores as reals so threshold boundaries (3.5 per criterion)
// can be probed directly; RatingSet's integer scores convert losslessly.
struct ScoreTriple {
  double dutchness = 0.0;
  double helpfulness = 0.0;
  double conciseness = 0.0;

  ScoreTriple() = default;
  ScoreTriple(double d, double h, double c)
      : dutchness(d), helpfulness(h), conciseness(c) {}
  ScoreTriple(const RatingSet& r)  // NOLINT: implicit by design
      : dutchness(r.dutchness),
        helpfulness(r.helpfulness),
        conciseness(r.conciseness) {}

  double average() const { return (dutchness + helpfulness + conciseness) / 3.0; }
  double min_score() const;
};

// The cleaned-subset selection rules. Bounds are frozen as stated:
// average >= 4.0 kept, criterion < 3.5 discarded, gap kept iff within
// [0.25, 2.0] inclusive.
struct CleanedThresholds {
  double min_avg_both = 4.0;
  double min_each_criterion = 3.5;
  double min_gap = 0.25;
  double max_gap = 2.0;
};

struct PairDecision {
  enum class Outcome { Keep, Discard };

  Outcome outcome = Outcome::Discard;
  int chosen_index = 0;        // valid when outcome == Keep
  std::string discard_reason;  // valid when outcome == Discard
  DecisionMode mode = DecisionMode::Naive;
};

class EmptyResponseError : public std::runtime_error {
 public:
  explicit EmptyResponseError(const std::string& what)
      : std::runtime_error(what) {}
};

class JudgeUnparseableError : public std::runtime_error {
 public:
  JudgeUnparseableError(CriterionKey criterion, const std::string& what)
      : std::runtime_error(what), criterion_(criterion) {}
  CriterionKey criterion() const { return criterion_; }

 private:
  CriterionKey criterion_;
};

// Reference response wins unconditionally; identical responses are
// degenerate and discarded.
PairDecision decide_naive(const std::string& reference_response,
                          const std::string& other_response);

// Applies the cleaned-subset rules; on an exact average tie the reference
// index wins.
PairDecision decide_cleaned(const ScoreTriple& a, const ScoreTriple& b,
                            int reference_index,
                            const CleanedThresholds& thresholds);

// One judge request per criterion through the backend, parsed with
// extract_rating; unparseable replies are retried up to `retries` times
// before JudgeUnparseableError. `votes` > 1 queries each criterion that
// many times and takes the median (use an odd count).
RatingSet score_response(const std::string& prompt_nl,
                         const std::string& response, ChatBackend& backend,
                         const std::vector<Criterion>& criteria,
                         int retries = 2, int votes = 1);

struct CandidateResponse {
  std::string model;
  std::string text;
  std::optional<RatingSet> ratings;
};

struct PairCandidate {
  std::string id;
  std::optional<std::string> system;
  std::string prompt_nl;
  std::vector<CandidateResponse> responses;  // exactly two
};

struct DiscardRecord {
  std::string id;
  std::string reason;
  std::optional<double> avg_a;
  std::optional<double> avg_b;
  std::optional<double> gap;
};

struct PairBuildResult {
  std::vector<PreferencePair> pairs;
  std::vector<DiscardRecord> discards;
};

// Builds preference pairs record by record; per-record failures become
// discard entries, never abort the stream. In judged mode, responses
// missing ratings are scored through `backend` (required); naive mode
// never touches the backend. The reference response is responses[0].
PairBuildResult build_pairs(const std::vector<PairCandidate>& candidates,
                            DecisionMode mode,
                            const CleanedThresholds& thresholds,
                            ChatBackend* backend = nullptr,
                            int max_in_flight = 1, int judge_votes = 1);

}  // namespace polder
