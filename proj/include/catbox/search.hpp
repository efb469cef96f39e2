#ifndef CATBOX_SEARCH_HPP
#define CATBOX_SEARCH_HPP

#include "catbox/dynamics.hpp"
#include "catbox/evaluate.hpp"
#include "catbox/strategy.hpp"
#include "catbox/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catbox {

enum class Objective { MinDuration, MinEscape };

std::string to_string(Objective o);
Objective parse_objective(std::string_view text);

struct SearchConfig {
  Objective objective = Objective::MinDuration;
  int maxdepth = 20;  // absolute step limit
  // Prune every node whose bound exceeds this value of the objective.
  std::optional<Rational> incumbent;
  // Step 1 only tries one box per symmetry orbit, and any node whose
  // distribution is fixed by a symmetry only tries one child per orbit.
  bool symmetry_reduction = true;
  // Forced openings before the search takes over, e.g. the candidate's first
  // openings followed by a deviation.
  std::vector<BoxId> root;
  // Collect every strategy whose objective is within epsilon of the best.
  // Only step 1 is reduced by symmetry in this mode.
  std::optional<Rational> all_optima_within;
  // Start from the sweep (line without exits), twice-left-twice-right (line
  // with exits, n >= 4) or "(1)", improved by a search to half the depth
  // when maxdepth exceeds 12.
  bool warm_start = true;
  // Refutation mode for the prover: nothing is pruned unless its bound is
  // strictly above `incumbent`; the first completion strictly below
  // `incumbent` stops the search, one equal to it is recorded as a tie.
  bool refute = false;
  // Sharpen the bounds by one step: the next opening catches at most the
  // fullest box and the next move lets out at most the mass beside the exits.
  // Off, the bounds are exactly those of lower_bound().
  bool lookahead_bound = true;
  int max_period = 12;
  int threads = 1;
  long node_limit = 0;  // 0 means unlimited
};

struct SearchCandidate {
  Strategy strategy;  // canonical
  EvalResult eval;
  std::string source;  // "finite", "periodic", "repetition", "warm-start"
};

struct SearchOutcome {
  std::optional<SearchCandidate> best;
  std::vector<SearchCandidate> optima;  // only with all_optima_within
  bool optima_truncated = false;
  // Bounds on the objective over the searched space; the upper bound is the
  // value of `best`.
  Rational lower_bound;
  std::optional<Rational> upper_bound;
  std::optional<RepetitionCertificate> certificate;
  long nodes = 0;
  long pruned = 0;
  long frontier = 0;    // unresolved nodes left at maxdepth
  int deepest_cut = 0;  // latest absolute step at which a branch was closed
  bool aborted = false;
  std::optional<SearchCandidate> counterexample;  // refute mode: strictly better
  std::optional<SearchCandidate> tie;             // refute mode: equal value
  std::string note;

  // Every branch was closed before maxdepth.
  bool complete() const { return frontier == 0 && !aborted; }
};

// Depth-first branch and prune over opening sequences. Children are tried in
// ascending box order and an empty box is never opened. Node distributions
// are kept exact as integer numerators over (boxes * L^t), where L is the
// kernel's common denominator.
//
// A branch is closed when
//  - its lower bound cannot beat the incumbent,
//  - all mass is resolved (finite candidate),
//  - its normalized distribution repeats one seen up to max_period steps
//    earlier on the same line; the repeated segment is promoted to a cycle
//    and evaluated exactly.
// Whenever the last 2p openings form two equal blocks (p <= max_period) the
// block is also tried as a cycle from the current node.
//
// MinDuration minimizes expected duration; MinEscape minimizes the escape
// rate, then duration, then the opening sequence.
SearchOutcome search_optimal(const Topology& t, const SearchConfig& cfg);

// MinDuration: sum of step times terminated mass so far plus (step + 1) times
// the mass still in the boxes. MinEscape: the mass escaped so far.
Rational lower_bound(const Distribution& d, const Rational& weighted, int step, Objective objective);
Rational lower_bound(const StepTrace& trace, int step, Objective objective);

// Objective value of an evaluation.
const Rational& objective_value(const EvalResult& r, Objective objective);

// Smallest opening sequence among the images of s under the symmetries of t.
Strategy symmetric_representative(const Topology& t, const Strategy& s);

}  // namespace catbox

#endif  // CATBOX_SEARCH_HPP
