#include "catbox/prove.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace catbox {

std::string to_string(DeviationStatus s) {
  switch (s) {
    case DeviationStatus::Refuted:
      return "refuted";
    case DeviationStatus::SymmetricEquivalent:
      return "symmetric";
    case DeviationStatus::Tie:
      return "tie";
    case DeviationStatus::Counterexample:
      return "counterexample";
    case DeviationStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool OptimalityCertificate::certified() const {
  return std::all_of(records.begin(), records.end(), [](const DeviationRecord& r) {
    return r.status == DeviationStatus::Refuted || r.status == DeviationStatus::SymmetricEquivalent ||
           r.status == DeviationStatus::Tie;
  });
}

bool OptimalityCertificate::has_counterexample() const {
  return std::any_of(records.begin(), records.end(),
                     [](const DeviationRecord& r) { return r.status == DeviationStatus::Counterexample; });
}

int OptimalityCertificate::latest_refutation() const {
  int latest = 0;
  for (const auto& r : records) {
    if (r.status == DeviationStatus::Refuted || r.status == DeviationStatus::Tie) latest = std::max(latest, r.refuted_at);
  }
  return latest;
}

long OptimalityCertificate::nodes() const {
  long total = 0;
  for (const auto& r : records) total += r.nodes;
  return total;
}

namespace {

bool fixes(const Permutation& p, const Distribution& d) {
  for (BoxId b = 1; b <= static_cast<BoxId>(d.inbox.size()); ++b) {
    if (d.at(p[static_cast<std::size_t>(b)]) != d.at(b)) return false;
  }
  return true;
}

}  // namespace

OptimalityCertificate verify_local_optimality(const Topology& t, const Strategy& candidate, const ProveConfig& cfg) {
  if (cfg.horizon < 1 || cfg.lookahead < 1) throw std::invalid_argument("horizon and lookahead must be at least 1");
  const Objective objective = cfg.objective.value_or(t.exits() ? Objective::MinEscape : Objective::MinDuration);
  const EvalResult eval = evaluate_strategy(t, candidate);

  OptimalityCertificate cert;
  cert.topology = t.spec();
  cert.candidate = candidate;
  cert.objective = objective;
  cert.value = objective_value(eval, objective);
  cert.horizon = cfg.horizon;
  cert.lookahead = cfg.lookahead;

  if (!candidate.finite()) {
    cert.repetition = find_scaled_repetition(t, candidate, 12, candidate.prefix_length() + 48);
  }
  if (cert.repetition) {
    const int end = cert.repetition->t0 + cert.repetition->period;
    cert.repetition_within_horizon = end <= cfg.horizon;
    cert.repetition_note = "distribution after step " + std::to_string(end) + " is " +
                           to_string(cert.repetition->factor) + " times the one after step " +
                           std::to_string(cert.repetition->t0);
  } else if (candidate.finite()) {
    cert.repetition_note = "finite strategy";
  } else {
    cert.repetition_note = "no exact scaled repetition with period <= 12; the certificate covers steps 1.." +
                           std::to_string(cfg.horizon) + " only";
  }

  const auto openings = candidate.openings(cfg.horizon);
  const StepTrace trace = play_trace(t, candidate, static_cast<int>(openings.size()));
  const auto group = symmetries(t);

  std::vector<DeviationRecord> records;
  for (int tau = 1; tau <= static_cast<int>(openings.size()); ++tau) {
    const BoxId chosen = openings[static_cast<std::size_t>(tau - 1)];
    const Distribution& before = trace.at(tau - 1);
    if (before.remaining() == 0) break;
    for (BoxId b = 1; b <= t.boxes(); ++b) {
      if (b == chosen) continue;
      DeviationRecord r;
      r.step = tau;
      r.alternative = b;
      for (std::size_t g = 1; g < group.size(); ++g) {
        if (group[g][static_cast<std::size_t>(chosen)] == b && fixes(group[g], before)) {
          r.status = DeviationStatus::SymmetricEquivalent;
          break;
        }
      }
      records.push_back(std::move(r));
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= records.size()) return;
      DeviationRecord& r = records[i];
      if (r.status == DeviationStatus::SymmetricEquivalent) continue;
      SearchConfig sc;
      sc.objective = objective;
      sc.maxdepth = r.step + cfg.lookahead;
      sc.incumbent = cert.value;
      sc.refute = true;
      sc.warm_start = false;
      sc.lookahead_bound = cfg.lookahead_bound;
      sc.node_limit = cfg.node_limit;
      sc.root.assign(openings.begin(), openings.begin() + (r.step - 1));
      sc.root.push_back(r.alternative);
      const SearchOutcome out = search_optimal(t, sc);
      r.nodes = out.nodes;
      r.lower_bound = out.lower_bound;
      if (out.counterexample) {
        r.status = DeviationStatus::Counterexample;
        r.counterexample = out.counterexample;
      } else if (out.complete()) {
        r.status = out.tie ? DeviationStatus::Tie : DeviationStatus::Refuted;
        r.refuted_at = out.deepest_cut;
        r.counterexample = out.tie;
      } else {
        r.status = DeviationStatus::Inconclusive;
      }
    }
  };
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  cert.records = std::move(records);
  return cert;
}

}  // namespace catbox
