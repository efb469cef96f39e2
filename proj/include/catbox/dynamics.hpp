#ifndef CATBOX_DYNAMICS_HPP
#define CATBOX_DYNAMICS_HPP

#include "catbox/matrix.hpp"
#include "catbox/strategy.hpp"
#include "catbox/topology.hpp"

#include <string>
#include <utility>
#include <vector>

namespace catbox {

// Where the cat may be: inbox[b - 1] for box b, plus the mass already caught
// or escaped. The three parts always add up to exactly one.
struct Distribution {
  RationalVector inbox;
  Rational caught = 0;
  Rational escaped = 0;

  Rational remaining() const { return sum(inbox); }
  Rational at(BoxId b) const { return inbox.at(static_cast<std::size_t>(b - 1)); }
  bool operator==(const Distribution&) const = default;
};

Distribution uniform_init(const Topology& t);

// Opening box b catches whatever mass sits there.
std::pair<Distribution, Rational> apply_open(const Distribution& d, BoxId b);

// One move of the cat; the mass that leaves the grid is returned and added
// to d.escaped.
std::pair<Distribution, Rational> apply_move(const Distribution& d, const MoveKernel& k);

// Floating-point move for numeric experiments; returns the escaped mass.
double apply_move_numeric(std::vector<double>& inbox, const MoveKernel& k);

struct StepRecord {
  int step = 0;
  BoxId opened = 0;
  Rational caught;   // caught at this step
  Rational escaped;  // escaped by this step's move
  Distribution after;
};

struct StepTrace {
  Distribution initial;
  std::vector<StepRecord> steps;

  // Distribution after step t; t = 0 is the initial one.
  const Distribution& at(int t) const;
  int length() const { return static_cast<int>(steps.size()); }
};

// Plays `steps` rounds of open-then-move from the uniform start. A finite
// strategy may stop early once the boxes are empty; running out of openings
// with mass left throws StrategyExhausted.
StepTrace play_trace(const Topology& t, const Strategy& s, int steps);

// Same, from an arbitrary starting distribution and first step index.
StepTrace play_trace_from(const Topology& t, const Strategy& s, const Distribution& start, int first_step,
                          int steps);

std::string trace_to_text(const StepTrace& trace);

// One full cycle of (open, move) as a linear map on in-box mass.
// m(i, j) is the mass that ends in box i+1 per unit of mass entering the
// cycle in box j+1. The functionals give, per unit entering mass in box j+1,
// the caught and escaped mass during the cycle and the termination mass
// weighted by its 1-based step offset within the cycle.
struct CycleMap {
  RationalMatrix m;
  RationalVector caught_w;
  RationalVector escaped_w;
  RationalVector duration_w;
  int length = 0;
};

CycleMap cycle_map(const Topology& t, const std::vector<BoxId>& cycle);

}  // namespace catbox

#endif  // CATBOX_DYNAMICS_HPP
