#ifndef CATBOX_EVALUATE_HPP
#define CATBOX_EVALUATE_HPP

#include "catbox/dynamics.hpp"
#include "catbox/strategy.hpp"
#include "catbox/topology.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catbox {

class UnresolvedStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivergentStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact value (lower == upper) or a certified enclosure.
struct Quantity {
  Rational lower;
  Rational upper;

  static Quantity exact_value(const Rational& v) { return {v, v}; }
  bool exact() const { return lower == upper; }
  Rational midpoint() const { return (lower + upper) / 2; }
  Rational halfwidth() const { return (upper - lower) / 2; }
  const Rational& value() const;  // throws std::logic_error unless exact
};

struct RepetitionCertificate {
  int t0 = 0;
  int period = 0;
  Rational factor;  // remaining mass after t0 + period over remaining mass after t0
};

struct EvalResult {
  Quantity duration;
  Quantity escape_rate;
  Quantity caught_rate;
  bool exact = true;
  // "resolved" (finite, every cat caught or escaped), "cyclic" (closed form
  // over the repeated cycle) or "certified" (enclosure of an unfinished prefix)
  std::string termination;
  std::optional<RepetitionCertificate> certificate;
};

// Exact expected duration, escape rate and catch rate.
//
// The prefix is played step by step. For the cycle, let v be the in-box mass
// entering the first repetition and M the cycle map restricted to the boxes
// reachable from v. With x = (I - M)^-1 v and y = (I - M)^-1 M x, the tail
// contributes c.x caught, e.x escaped and k (c+e).x + l (c+e).y + d.x to the
// duration sum, where k is the prefix length, l the cycle length and d the
// offset-weighted termination functional.
//
// Throws UnresolvedStrategy for a finite strategy that leaves mass in the
// boxes and DivergentStrategy when some mass is never resolved.
EvalResult evaluate_strategy(const Topology& t, const Strategy& s);

// Value of repeating `cycle` forever from distribution d, reached after
// steps_done steps with `weighted` = sum of step index times terminated mass
// so far. An empty cycle requires d to have no mass left in the boxes.
EvalResult evaluate_continuation(const Topology& t, const Distribution& d, const Rational& weighted, int steps_done,
                                 const std::vector<BoxId>& cycle);

// A finite strategy that does not resolve all mass is enclosed: every cat
// still in a box needs at least one more step (lower bound), and completing
// with the sweep (line without exits) or with the cycle `completion` gives an
// achievable upper bound.
EvalResult evaluate_certified(const Topology& t, const Strategy& s,
                              const std::optional<Strategy>& completion = std::nullopt);

// Earliest (t0, period) with t0 at or after the prefix, period a multiple of
// the cycle length and at most max_period, such that the normalized in-box
// distributions after steps t0 and t0 + period are equal.
std::optional<RepetitionCertificate> detect_scaled_repetition(const StepTrace& trace, const Strategy& s,
                                                              int max_period);

// Plays just long enough to find a scaled repetition.
std::optional<RepetitionCertificate> find_scaled_repetition(const Topology& t, const Strategy& s, int max_period,
                                                            int max_steps);

// Closed-form sum of the geometric series implied by a repetition; must agree
// with evaluate_strategy exactly.
EvalResult evaluate_by_repetition(const Topology& t, const Strategy& s, const RepetitionCertificate& cert);

struct AsymptoticProfile {
  std::vector<double> profile;  // relative in-box distribution at cycle entry, sums to 1
  double decay = 0.0;           // remaining-mass factor per cycle
  double residual = 0.0;
  long iterations = 0;
};

// Dominant eigenpair of the cycle map by power iteration, started from the
// actual in-box distribution at the first cycle entry. Starting there matters
// when the dominant eigenvalue is repeated (odd/even populations on a line).
AsymptoticProfile asymptotic_profile(const Topology& t, const Strategy& s, double tol = 1e-13);

}  // namespace catbox

#endif  // CATBOX_EVALUATE_HPP
