#ifndef CATBOX_PROVE_HPP
#define CATBOX_PROVE_HPP

#include "catbox/evaluate.hpp"
#include "catbox/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catbox {

enum class DeviationStatus {
  Refuted,              // every completion's bound passed the candidate's value
  SymmetricEquivalent,  // a symmetry fixing the state maps the candidate's box here
  Tie,                  // closed, and some completion matches the candidate
  Counterexample,       // a completion beats the candidate
  Inconclusive,         // lookahead exhausted with open branches
};

std::string to_string(DeviationStatus s);

struct DeviationRecord {
  int step = 0;  // 1-based step at which the candidate is changed
  BoxId alternative = 0;
  DeviationStatus status = DeviationStatus::Inconclusive;
  int refuted_at = 0;  // absolute step by which the last branch was closed
  long nodes = 0;
  Rational lower_bound;  // objective bound over the deviation's subtree
  std::optional<SearchCandidate> counterexample;  // the better or equal completion
};

struct ProveConfig {
  std::optional<Objective> objective;  // default: escape with exits, else duration
  int horizon = 5;
  int lookahead = 20;
  int threads = 1;
  // One-step sharpened bounds (see SearchConfig); off, branches close one
  // step later at most.
  bool lookahead_bound = true;
  long node_limit = 0;  // per deviation
};

struct OptimalityCertificate {
  std::string topology;
  Strategy candidate;
  Objective objective = Objective::MinDuration;
  Rational value;
  int horizon = 0;
  int lookahead = 0;
  std::vector<DeviationRecord> records;
  std::optional<RepetitionCertificate> repetition;
  // The repeated state recurs within the verified steps, so the decisions
  // after the horizon repeat decisions already checked.
  bool repetition_within_horizon = false;
  std::string repetition_note;

  // No deviation beats the candidate within the checked steps: every record
  // is refuted, symmetric or a tie.
  bool certified() const;
  bool has_counterexample() const;
  int latest_refutation() const;
  long nodes() const;
};

// For each step tau <= horizon and each box other than the candidate's, the
// search is rooted at the candidate's first tau - 1 openings followed by that
// box and run in refutation mode against the candidate's exact value down to
// step tau + lookahead.
OptimalityCertificate verify_local_optimality(const Topology& t, const Strategy& candidate, const ProveConfig& cfg);

}  // namespace catbox

#endif  // CATBOX_PROVE_HPP
