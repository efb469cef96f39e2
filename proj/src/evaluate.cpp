#include "catbox/evaluate.hpp"

#include "catbox/linear.hpp"
#include "catbox/spectral.hpp"

#include <algorithm>
#include <deque>

namespace catbox {

namespace {

struct PrefixPlay {
  Distribution state;
  Rational weighted;  // sum over steps of step index times terminated mass
};

PrefixPlay play_prefix(const Topology& t, const std::vector<BoxId>& boxes) {
  const MoveKernel kernel = move_kernel(t);
  PrefixPlay out{uniform_init(t), 0};
  int step = 0;
  for (BoxId b : boxes) {
    ++step;
    if (!t.contains(b)) throw std::invalid_argument("strategy opens a box outside " + t.spec());
    auto [opened, caught] = apply_open(out.state, b);
    auto [moved, escaped] = apply_move(opened, kernel);
    out.state = std::move(moved);
    out.weighted += step * (caught + escaped);
  }
  return out;
}

EvalResult exact_result(const Rational& duration, const Rational& escaped, const Rational& caught,
                        std::string termination) {
  EvalResult r;
  r.duration = Quantity::exact_value(duration);
  r.escape_rate = Quantity::exact_value(escaped);
  r.caught_rate = Quantity::exact_value(caught);
  r.exact = true;
  r.termination = std::move(termination);
  return r;
}

// Boxes that can hold mass at a cycle entry when starting from v.
std::vector<std::size_t> reachable_support(const RationalMatrix& m, const RationalVector& v) {
  const std::size_t n = v.size();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] != 0) {
      seen[j] = true;
      queue.push_back(j);
    }
  }
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen[i] && m(i, j) != 0) {
        seen[i] = true;
        queue.push_back(i);
      }
    }
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) support.push_back(i);
  }
  return support;
}

Rational dot(const RationalVector& w, const std::vector<std::size_t>& support, const RationalVector& x) {
  Rational acc = 0;
  for (std::size_t a = 0; a < support.size(); ++a) acc += w[support[a]] * x[a];
  return acc;
}

bool proportional(const RationalVector& a, const Rational& mass_a, const RationalVector& b, const Rational& mass_b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * mass_b != b[i] * mass_a) return false;
  }
  return true;
}

}  // namespace

const Rational& Quantity::value() const {
  if (!exact()) throw std::logic_error("quantity is an enclosure, not an exact value");
  return lower;
}

EvalResult evaluate_continuation(const Topology& t, const Distribution& d, const Rational& weighted, int steps_done,
                                 const std::vector<BoxId>& cycle) {
  const Rational remaining = d.remaining();
  if (remaining == 0) return exact_result(weighted, d.escaped, d.caught, "resolved");
  if (cycle.empty()) {
    throw UnresolvedStrategy("finite strategy leaves mass " + to_string(remaining) + " in the boxes after step " +
                             std::to_string(steps_done));
  }

  const CycleMap cm = cycle_map(t, cycle);
  const auto support = reachable_support(cm.m, d.inbox);
  const std::size_t n = support.size();
  RationalMatrix a(n, n);
  RationalMatrix m(n, n);
  RationalVector v(n);
  for (std::size_t r = 0; r < n; ++r) {
    v[r] = d.inbox[support[r]];
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = cm.m(support[r], support[c]);
      a(r, c) = (r == c ? Rational(1) : Rational(0)) - m(r, c);
    }
  }
  RationalVector x;
  RationalVector y;
  try {
    x = solve_rational_linear(a, v);
    y = solve_rational_linear(a, m * x);
  } catch (const SingularMatrix&) {
    throw DivergentStrategy("some mass is never caught and never escapes under the cycle " +
                            format_strategy(Strategy({}, cycle)));
  }

  RationalVector term(cm.caught_w.size());
  for (std::size_t i = 0; i < term.size(); ++i) term[i] = cm.caught_w[i] + cm.escaped_w[i];
  const Rational caught = d.caught + dot(cm.caught_w, support, x);
  const Rational escaped = d.escaped + dot(cm.escaped_w, support, x);
  const Rational duration = weighted + steps_done * dot(term, support, x) +
                            static_cast<long>(cycle.size()) * dot(term, support, y) + dot(cm.duration_w, support, x);
  return exact_result(duration, escaped, caught, "cyclic");
}

EvalResult evaluate_strategy(const Topology& t, const Strategy& s) {
  if (s.prefix().empty() && s.cycle().empty()) throw std::invalid_argument("empty strategy");
  const PrefixPlay pre = play_prefix(t, s.prefix());
  return evaluate_continuation(t, pre.state, pre.weighted, s.prefix_length(), s.cycle());
}

EvalResult evaluate_certified(const Topology& t, const Strategy& s, const std::optional<Strategy>& completion) {
  const PrefixPlay pre = play_prefix(t, s.prefix());
  const Rational remaining = pre.state.remaining();
  if (!s.finite() || remaining == 0) return evaluate_strategy(t, s);

  Strategy tail;
  if (completion) {
    tail = *completion;
  } else if (t.kind() == TopologyKind::Line && !t.exits() && t.size() >= 3) {
    tail = sweep_strategy(t.size());
  } else {
    throw UnresolvedStrategy("no default completion for " + t.spec() + "; supply one");
  }
  std::vector<BoxId> boxes = s.prefix();
  boxes.insert(boxes.end(), tail.prefix().begin(), tail.prefix().end());
  const EvalResult completed = evaluate_strategy(t, Strategy(std::move(boxes), tail.cycle()));

  const Rational& duration_hi = completed.duration.value();
  const Rational duration_lo = pre.weighted + (s.prefix_length() + 1) * remaining;

  EvalResult r;
  r.duration = {duration_lo, std::max(duration_lo, duration_hi)};
  const Rational escape_room = t.exits() ? remaining : Rational(0);
  r.escape_rate = {pre.state.escaped, pre.state.escaped + escape_room};
  r.caught_rate = {pre.state.caught, pre.state.caught + remaining};
  r.exact = false;
  r.termination = "certified";
  return r;
}

std::optional<RepetitionCertificate> detect_scaled_repetition(const StepTrace& trace, const Strategy& s,
                                                              int max_period) {
  if (s.finite()) return std::nullopt;
  const int first = trace.steps.empty() ? 1 : trace.steps.front().step;
  const int offset = first - 1;  // global step of trace.at(0)
  const int len = trace.length();
  const int l = s.cycle_length();
  for (int t0 = std::max(s.prefix_length(), offset); t0 + l <= offset + len; ++t0) {
    const Distribution& a = trace.at(t0 - offset);
    const Rational mass_a = a.remaining();
    if (mass_a == 0) return std::nullopt;
    for (int p = l; p <= max_period && t0 + p <= offset + len; p += l) {
      const Distribution& b = trace.at(t0 + p - offset);
      const Rational mass_b = b.remaining();
      if (proportional(a.inbox, mass_a, b.inbox, mass_b)) return RepetitionCertificate{t0, p, mass_b / mass_a};
    }
  }
  return std::nullopt;
}

std::optional<RepetitionCertificate> find_scaled_repetition(const Topology& t, const Strategy& s, int max_period,
                                                            int max_steps) {
  if (s.finite()) return std::nullopt;
  return detect_scaled_repetition(play_trace(t, s, max_steps), s, max_period);
}

EvalResult evaluate_by_repetition(const Topology& t, const Strategy& s, const RepetitionCertificate& cert) {
  if (cert.t0 < s.prefix_length() || cert.period <= 0 || s.finite() || cert.period % s.cycle_length() != 0) {
    throw std::invalid_argument("repetition certificate does not fit the strategy");
  }
  const StepTrace trace = play_trace(t, s, cert.t0 + cert.period);
  const Distribution& start = trace.at(cert.t0);
  const Distribution& end = trace.at(cert.t0 + cert.period);
  if (start.remaining() == 0 || end.remaining() != cert.factor * start.remaining() ||
      !proportional(start.inbox, start.remaining(), end.inbox, end.remaining())) {
    throw std::invalid_argument("repetition certificate does not hold on the trace");
  }

  Rational weighted_head = 0;
  Rational term_period = 0;
  Rational weighted_period = 0;
  for (const auto& r : trace.steps) {
    const Rational term = r.caught + r.escaped;
    if (r.step <= cert.t0) {
      weighted_head += r.step * term;
    } else {
      term_period += term;
      weighted_period += (r.step - cert.t0) * term;
    }
  }
  const Rational& lambda = cert.factor;
  const Rational one_minus = 1 - lambda;
  const Rational duration = weighted_head + cert.t0 * term_period / one_minus +
                            cert.period * term_period * lambda / (one_minus * one_minus) +
                            weighted_period / one_minus;
  const Rational escaped = start.escaped + (end.escaped - start.escaped) / one_minus;
  const Rational caught = start.caught + (end.caught - start.caught) / one_minus;
  EvalResult r = exact_result(duration, escaped, caught, "cyclic");
  r.certificate = cert;
  return r;
}

AsymptoticProfile asymptotic_profile(const Topology& t, const Strategy& s, double tol) {
  if (s.finite()) throw std::invalid_argument("asymptotic profile needs a cyclic strategy");
  const PrefixPlay pre = play_prefix(t, s.prefix());
  const CycleMap cm = cycle_map(t, s.cycle());
  std::optional<std::vector<double>> start;
  if (pre.state.remaining() != 0) start = to_numeric(pre.state.inbox);
  const Eigenpair pair = dominant_eigenpair(to_numeric(cm.m), tol, start);
  return {pair.vector, pair.value, pair.residual, pair.iterations};
}

}  // namespace catbox
