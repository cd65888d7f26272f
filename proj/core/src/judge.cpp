#include "polder/judge.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "polder/text.hpp"
#include "polder/transcript.hpp"

namespace polder {

double ScoreTriple::min_score() const {
  return std::min({dutchness, helpfulness, conciseness});
}

PairDecision decide_naive(const std::string& reference_response,
                          const std::string& other_response) {
  const std::string ref = text::trim(reference_response);
  const std::string other = text::trim(other_response);
  if (ref.empty() || other.empty()) {
    throw EmptyResponseError("naive decision needs two non-empty responses");
  }
  PairDecision d;
  d.mode = DecisionMode::Naive;
  if (ref == other) {
    d.outcome = PairDecision::Outcome::Discard;
    d.discard_reason = "EmptyPairDegenerate";
    return d;
  }
  d.outcome = PairDecision::Outcome::Keep;
  d.chosen_index = 0;
  return d;
}

PairDecision decide_cleaned(const ScoreTriple& a, const ScoreTriple& b,
                            int reference_index,
                            const CleanedThresholds& t) {
  PairDecision d;
  d.mode = DecisionMode::Judged;
  d.outcome = PairDecision::Outcome::Discard;

  const double avg_a = a.average();
  const double avg_b = b.average();
  if (std::min(avg_a, avg_b) < t.min_avg_both) {
    d.discard_reason = "below_avg_floor";
    return d;
  }
  if (a.min_score() < t.min_each_criterion ||
      b.min_score() < t.min_each_criterion) {
    d.discard_reason = "criterion_below_min";
    return d;
  }
  const double gap = std::abs(avg_a - avg_b);
  if (gap < t.min_gap) {
    d.discard_reason = "gap_too_small";
    return d;
  }
  if (gap > t.max_gap) {
    d.discard_reason = "gap_too_large";
    return d;
  }
  d.outcome = PairDecision::Outcome::Keep;
  if (avg_a > avg_b) {
    d.chosen_index = 0;
  } else if (avg_b > avg_a) {
    d.chosen_index = 1;
  } else {
    d.chosen_index = reference_index;
  }
  return d;
}

RatingSet score_response(const std::string& prompt_nl,
                         const std::string& response, ChatBackend& backend,
                         const std::vector<Criterion>& criteria,
                         int retries, int votes) {
  int scores[3] = {0, 0, 0};
  if (criteria.size() != 3) {
    throw JudgeUnparseableError(CriterionKey::Dutchness,
                                "expected the three built-in criteria");
  }
  votes = std::max(1, votes);
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const ChatRequest request =
        render_rating_prompt(prompt_nl, response, criteria[c]);
    std::vector<int> values;
    std::string last_error;
    for (int v = 0; v < votes; ++v) {
      bool parsed = false;
      for (int attempt = 0; attempt <= retries && !parsed; ++attempt) {
        const CompletionResult result = backend.complete(request);
        try {
          values.push_back(extract_rating(result.text));
          parsed = true;
        } catch (const RatingError& e) {
          last_error = e.what();
        }
      }
      if (!parsed) {
        throw JudgeUnparseableError(
            criteria[c].key,
            std::string(criterion_name(criteria[c].key)) +
                " unparseable after retries: " + last_error);
      }
    }
    std::sort(values.begin(), values.end());
    scores[c] = values[values.size() / 2];
  }
  return RatingSet{scores[0], scores[1], scores[2]};
}

namespace {

struct CandidateOutcome {
  std::optional<PreferencePair> pair;
  std::optional<DiscardRecord> discard;
};

CandidateOutcome process_candidate(const PairCandidate& cand,
                                   DecisionMode mode,
                                   const CleanedThresholds& thresholds,
                                   ChatBackend* backend, int judge_votes) {
  CandidateOutcome out;
  auto discard = [&](std::string reason, std::optional<double> avg_a = {},
                     std::optional<double> avg_b = {},
                     std::optional<double> gap = {}) {
    out.discard = DiscardRecord{cand.id, std::move(reason), avg_a, avg_b, gap};
  };

  if (cand.responses.size() != 2) {
    discard("wrong_response_count");
    return out;
  }
  const CandidateResponse& ra = cand.responses[0];
  const CandidateResponse& rb = cand.responses[1];
  if (text::is_blank(ra.text) || text::is_blank(rb.text)) {
    discard("empty_response");
    return out;
  }
  if (text::trim(ra.text) == text::trim(rb.text)) {
    discard("EmptyPairDegenerate");
    return out;
  }

  PreferencePair pair;
  pair.id = cand.id;
  pair.system = cand.system;
  pair.prompt_nl = cand.prompt_nl;

  PairDecision decision;
  std::optional<RatingSet> ratings_a = ra.ratings;
  std::optional<RatingSet> ratings_b = rb.ratings;
  if (mode == DecisionMode::Naive) {
    decision = decide_naive(ra.text, rb.text);
  } else {
    try {
      if (!ratings_a) {
        ratings_a = score_response(cand.prompt_nl, ra.text, *backend,
                                   builtin_criteria(), 2, judge_votes);
      }
      if (!ratings_b) {
        ratings_b = score_response(cand.prompt_nl, rb.text, *backend,
                                   builtin_criteria(), 2, judge_votes);
      }
    } catch (const JudgeUnparseableError& e) {
      discard(std::string("judge_unparseable: ") + e.what());
      return out;
    } catch (const GatewayError& e) {
      discard(std::string("gateway_error: ") + e.what());
      return out;
    }
    decision = decide_cleaned(*ratings_a, *ratings_b, 0, thresholds);
  }

  if (decision.outcome == PairDecision::Outcome::Discard) {
    if (mode == DecisionMode::Judged) {
      const double avg_a = ScoreTriple(*ratings_a).average();
      const double avg_b = ScoreTriple(*ratings_b).average();
      discard(decision.discard_reason, avg_a, avg_b, std::abs(avg_a - avg_b));
    } else {
      discard(decision.discard_reason);
    }
    return out;
  }

  const int chosen = decision.chosen_index;
  const CandidateResponse& win = cand.responses[static_cast<std::size_t>(chosen)];
  const CandidateResponse& lose =
      cand.responses[static_cast<std::size_t>(1 - chosen)];
  pair.chosen = win.text;
  pair.rejected = lose.text;
  pair.chosen_model = win.model;
  pair.rejected_model = lose.model;
  pair.decision_mode = mode;
  if (mode == DecisionMode::Judged) {
    pair.chosen_ratings = chosen == 0 ? ratings_a : ratings_b;
    pair.rejected_ratings = chosen == 0 ? ratings_b : ratings_a;
  }

  auto violations = validate_pair(pair);
  if (!violations.empty()) {
    discard("invalid_pair: " + violation_message(violations.front()));
    return out;
  }
  out.pair = std::move(pair);
  return out;
}

}  // namespace

PairBuildResult build_pairs(const std::vector<PairCandidate>& candidates,
                            DecisionMode mode,
                            const CleanedThresholds& thresholds,
                            ChatBackend* backend, int max_in_flight,
                            int judge_votes) {
  if (mode == DecisionMode::Judged) {
    bool needs_backend = false;
    for (const PairCandidate& c : candidates) {
      for (const CandidateResponse& r : c.responses) {
        if (!r.ratings) needs_backend = true;
      }
    }
    if (needs_backend && backend == nullptr) {
      throw std::invalid_argument(
          "judged mode needs a backend to score unrated responses");
    }
  }

  std::vector<CandidateOutcome> outcomes(candidates.size());
  const int workers = std::max(
      1, std::min<int>(max_in_flight, static_cast<int>(candidates.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= candidates.size()) return;
      outcomes[i] = process_candidate(candidates[i], mode, thresholds,
                                      backend, judge_votes);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  PairBuildResult result;
  for (CandidateOutcome& o : outcomes) {
    if (o.pair) result.pairs.push_back(std::move(*o.pair));
    if (o.discard) result.discards.push_back(std::move(*o.discard));
  }
  return result;
}

}  // namespace polder
