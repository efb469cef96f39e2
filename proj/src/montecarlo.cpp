#include "catbox/montecarlo.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace catbox {

namespace {

constexpr int kPartitions = 64;

struct Row {
  std::vector<double> cumulative;  // last entry is 1
  std::vector<BoxId> to;
};

struct Tally {
  long caught = 0;
  long escaped = 0;
  long truncated = 0;
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  std::vector<long> histogram;
};

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

double SimReport::escape_frequency() const {
  return trials > 0 ? static_cast<double>(escaped) / static_cast<double>(trials) : 0.0;
}

double SimReport::duration_stderr() const {
  const long ended = caught + escaped;
  return ended > 0 ? std::sqrt(duration_variance / static_cast<double>(ended)) : 0.0;
}

double SimReport::escape_stderr() const {
  const double p = escape_frequency();
  return trials > 0 ? std::sqrt(p * (1 - p) / static_cast<double>(trials)) : 0.0;
}

SimReport simulate(const Topology& t, const Strategy& s, const SimConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  for (BoxId b : s.prefix()) {
    if (!t.contains(b)) throw std::invalid_argument("strategy opens a box outside the topology");
  }
  for (BoxId b : s.cycle()) {
    if (!t.contains(b)) throw std::invalid_argument("strategy opens a box outside the topology");
  }

  const MoveKernel kernel = move_kernel(t);
  std::vector<Row> rows(static_cast<std::size_t>(t.boxes()) + 1);
  for (BoxId b = 1; b <= t.boxes(); ++b) {
    Rational acc = 0;
    for (const Move& m : kernel.from(b)) {
      acc += m.probability;
      rows[static_cast<std::size_t>(b)].cumulative.push_back(to_double(acc));
      rows[static_cast<std::size_t>(b)].to.push_back(m.to);
    }
  }
  // 0 marks a finite strategy's end
  std::vector<BoxId> openings(static_cast<std::size_t>(cfg.max_steps) + 1, 0);
  for (int step = 1; step <= cfg.max_steps; ++step) {
    if (step <= s.prefix_length() || !s.finite()) openings[static_cast<std::size_t>(step)] = s.box_at(step);
  }

  std::vector<Tally> tallies(kPartitions);
  auto run = [&](int p) {
    Tally& tally = tallies[static_cast<std::size_t>(p)];
    tally.histogram.assign(static_cast<std::size_t>(cfg.max_steps) + 1, 0);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(p)};
    std::mt19937_64 rng(seq);
    const long first = cfg.trials * p / kPartitions;
    const long last = cfg.trials * (p + 1) / kPartitions;
    for (long trial = first; trial < last; ++trial) {
      BoxId cat = 1 + std::min(t.boxes() - 1, static_cast<int>(uniform(rng) * t.boxes()));
      int end = 0;
      bool escaped = false;
      for (int step = 1; step <= cfg.max_steps; ++step) {
        const BoxId open = openings[static_cast<std::size_t>(step)];
        if (open == 0) break;
        if (open == cat) {
          end = step;
          break;
        }
        const Row& row = rows[static_cast<std::size_t>(cat)];
        const double u = uniform(rng);
        std::size_t k = 0;
        while (k + 1 < row.cumulative.size() && u >= row.cumulative[k]) ++k;
        cat = row.to[k];
        if (cat == kEscape) {
          end = step;
          escaped = true;
          break;
        }
      }
      if (end == 0) {
        ++tally.truncated;
        continue;
      }
      ++(escaped ? tally.escaped : tally.caught);
      ++tally.histogram[static_cast<std::size_t>(end)];
      tally.sum += static_cast<unsigned>(end);
      tally.sum_sq += static_cast<unsigned __int128>(end) * static_cast<unsigned>(end);
    }
  };

  std::atomic<int> next{0};
  auto work = [&] {
    for (int p = next.fetch_add(1); p < kPartitions; p = next.fetch_add(1)) run(p);
  };
  const int threads = std::clamp(cfg.threads, 1, kPartitions);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  SimReport r;
  r.topology = t.spec();
  r.strategy = format_strategy(s, t);
  r.generator = "mt19937_64/seed_seq(seed_lo,seed_hi,partition)";
  r.seed = cfg.seed;
  r.partitions = kPartitions;
  r.max_steps = cfg.max_steps;
  r.trials = cfg.trials;
  r.histogram.assign(static_cast<std::size_t>(cfg.max_steps) + 1, 0);
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  for (const Tally& tally : tallies) {
    r.caught += tally.caught;
    r.escaped += tally.escaped;
    r.truncated += tally.truncated;
    sum += tally.sum;
    sum_sq += tally.sum_sq;
    for (std::size_t k = 0; k < tally.histogram.size(); ++k) r.histogram[k] += tally.histogram[k];
  }
  std::size_t used = r.histogram.size();
  while (used > 1 && r.histogram[used - 1] == 0) --used;
  r.histogram.resize(used);

  const long ended = r.caught + r.escaped;
  if (ended > 0) {
    // exact integer sums, so the mean is independent of summation order
    const auto n = static_cast<long double>(ended);
    const auto s1 = static_cast<long double>(sum);
    const auto s2 = static_cast<long double>(sum_sq);
    r.mean_duration = static_cast<double>(s1 / n);
    if (ended > 1) r.duration_variance = static_cast<double>((s2 - s1 * s1 / n) / (n - 1));
  }
  return r;
}

CrosscheckReport crosscheck(const Topology& t, const Strategy& s, const SimConfig& cfg) {
  CrosscheckReport c;
  c.exact = evaluate_strategy(t, s);
  c.sim = simulate(t, s, cfg);
  const double duration = to_double(c.exact.duration.midpoint());
  const double escape = to_double(c.exact.escape_rate.midpoint());
  c.duration_diff = std::abs(c.sim.mean_duration - duration);
  c.escape_diff = std::abs(c.sim.escape_frequency() - escape);
  c.duration_limit = 3 * c.sim.duration_stderr() + to_double(c.exact.duration.halfwidth());
  c.escape_limit = 3 * c.sim.escape_stderr() + to_double(c.exact.escape_rate.halfwidth());
  c.duration_pass = c.duration_diff < c.duration_limit || c.duration_diff == 0;
  // without exits both sides are exactly zero
  c.escape_pass = c.escape_diff < c.escape_limit || c.escape_diff == 0;
  return c;
}

namespace {

nlohmann::ordered_json to_json(const SimReport& r) {
  nlohmann::ordered_json j;
  j["topology"] = r.topology;
  j["strategy"] = r.strategy;
  j["generator"] = r.generator;
  j["seed"] = r.seed;
  j["partitions"] = r.partitions;
  j["max_steps"] = r.max_steps;
  j["trials"] = r.trials;
  j["caught"] = r.caught;
  j["escaped"] = r.escaped;
  j["truncated"] = r.truncated;
  j["mean_duration"] = r.mean_duration;
  j["duration_variance"] = r.duration_variance;
  j["duration_stderr"] = r.duration_stderr();
  j["escape_frequency"] = r.escape_frequency();
  j["escape_stderr"] = r.escape_stderr();
  j["histogram"] = r.histogram;
  return j;
}

}  // namespace

std::string report_to_json(const SimReport& r) { return to_json(r).dump(2); }

std::string histogram_csv(const SimReport& r) {
  std::ostringstream out;
  out << "step,count\n";
  for (std::size_t k = 1; k < r.histogram.size(); ++k) out << k << ',' << r.histogram[k] << '\n';
  return out.str();
}

std::string crosscheck_to_json(const CrosscheckReport& c) {
  nlohmann::ordered_json j;
  j["simulation"] = to_json(c.sim);
  j["exact_duration"] = to_string(c.exact.duration.midpoint());
  j["exact_escape_rate"] = to_string(c.exact.escape_rate.midpoint());
  j["duration_diff"] = c.duration_diff;
  j["duration_limit"] = c.duration_limit;
  j["escape_diff"] = c.escape_diff;
  j["escape_limit"] = c.escape_limit;
  j["pass"] = c.pass();
  return j.dump(2);
}

}  // namespace catbox
