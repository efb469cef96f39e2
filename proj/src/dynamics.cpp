#include "catbox/dynamics.hpp"

#include <sstream>

namespace catbox {

namespace {

std::size_t index(BoxId b) { return static_cast<std::size_t>(b - 1); }

}  // namespace

Distribution uniform_init(const Topology& t) {
  Distribution d;
  d.inbox.assign(static_cast<std::size_t>(t.boxes()), ratio(1, t.boxes()));
  return d;
}

std::pair<Distribution, Rational> apply_open(const Distribution& d, BoxId b) {
  Distribution out = d;
  Rational& cell = out.inbox.at(index(b));
  Rational caught = cell;
  cell = 0;
  out.caught += caught;
  return {std::move(out), std::move(caught)};
}

std::pair<Distribution, Rational> apply_move(const Distribution& d, const MoveKernel& k) {
  if (static_cast<int>(d.inbox.size()) != k.boxes()) throw std::invalid_argument("kernel does not fit distribution");
  Distribution out;
  out.inbox.assign(d.inbox.size(), Rational(0));
  out.caught = d.caught;
  Rational escaped = 0;
  for (BoxId b = 1; b <= k.boxes(); ++b) {
    const Rational& mass = d.inbox[index(b)];
    if (mass == 0) continue;
    for (const auto& mv : k.from(b)) {
      if (mv.to == kEscape) {
        escaped += mass * mv.probability;
      } else {
        out.inbox[index(mv.to)] += mass * mv.probability;
      }
    }
  }
  out.escaped = d.escaped + escaped;
  return {std::move(out), std::move(escaped)};
}

double apply_move_numeric(std::vector<double>& inbox, const MoveKernel& k) {
  if (static_cast<int>(inbox.size()) != k.boxes()) throw std::invalid_argument("kernel does not fit distribution");
  std::vector<double> next(inbox.size(), 0.0);
  double escaped = 0.0;
  for (BoxId b = 1; b <= k.boxes(); ++b) {
    const double mass = inbox[index(b)];
    for (const auto& mv : k.from(b)) {
      const double share = mass * mv.probability.get_d();
      if (mv.to == kEscape) {
        escaped += share;
      } else {
        next[index(mv.to)] += share;
      }
    }
  }
  inbox = std::move(next);
  return escaped;
}

const Distribution& StepTrace::at(int t) const {
  if (t == 0) return initial;
  return steps.at(static_cast<std::size_t>(t - 1)).after;
}

StepTrace play_trace(const Topology& t, const Strategy& s, int steps) {
  return play_trace_from(t, s, uniform_init(t), 1, steps);
}

StepTrace play_trace_from(const Topology& t, const Strategy& s, const Distribution& start, int first_step,
                          int steps) {
  if (steps < 0) throw std::invalid_argument("negative step count");
  const MoveKernel kernel = move_kernel(t);
  StepTrace trace;
  trace.initial = start;
  Distribution d = start;
  for (int i = 0; i < steps; ++i) {
    const int step = first_step + i;
    if (s.finite() && step > s.prefix_length()) {
      if (d.remaining() == 0) break;
      throw StrategyExhausted("finite strategy exhausted at step " + std::to_string(step) + " with mass left");
    }
    const BoxId b = s.box_at(step);
    if (!t.contains(b)) throw std::invalid_argument("strategy opens a box outside " + t.spec());
    auto [opened, caught] = apply_open(d, b);
    auto [moved, escaped] = apply_move(opened, kernel);
    d = std::move(moved);
    trace.steps.push_back({step, b, std::move(caught), std::move(escaped), d});
  }
  return trace;
}

std::string trace_to_text(const StepTrace& trace) {
  std::ostringstream out;
  out << "step  box  caught  escaped  inbox\n";
  for (const auto& r : trace.steps) {
    out << r.step << "  " << r.opened << "  " << to_string(r.caught) << "  " << to_string(r.escaped) << "  [";
    for (std::size_t i = 0; i < r.after.inbox.size(); ++i) {
      if (i > 0) out << ", ";
      out << to_string(r.after.inbox[i]);
    }
    out << "]\n";
  }
  return out.str();
}

CycleMap cycle_map(const Topology& t, const std::vector<BoxId>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("cycle map of an empty cycle");
  const auto n = static_cast<std::size_t>(t.boxes());
  const MoveKernel kernel = move_kernel(t);
  CycleMap out{RationalMatrix(n, n), RationalVector(n), RationalVector(n), RationalVector(n),
               static_cast<int>(cycle.size())};
  // push a unit of mass from every box through the cycle
  for (std::size_t j = 0; j < n; ++j) {
    Distribution d;
    d.inbox.assign(n, Rational(0));
    d.inbox[j] = 1;
    int offset = 0;
    for (BoxId b : cycle) {
      ++offset;
      if (!t.contains(b)) throw std::invalid_argument("cycle opens a box outside " + t.spec());
      auto [opened, caught] = apply_open(d, b);
      auto [moved, escaped] = apply_move(opened, kernel);
      d = std::move(moved);
      out.caught_w[j] += caught;
      out.escaped_w[j] += escaped;
      out.duration_w[j] += offset * (caught + escaped);
    }
    for (std::size_t i = 0; i < n; ++i) out.m(i, j) = d.inbox[i];
  }
  return out;
}

}  // namespace catbox
