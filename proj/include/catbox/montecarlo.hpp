#ifndef CATBOX_MONTECARLO_HPP
#define CATBOX_MONTECARLO_HPP

#include "catbox/evaluate.hpp"
#include "catbox/strategy.hpp"
#include "catbox/topology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace catbox {

struct SimConfig {
  long trials = 1000000;
  std::uint64_t seed = 0;
  int max_steps = 10000;
  int threads = 1;
};

struct SimReport {
  std::string topology;
  std::string strategy;
  std::string generator;  // PRNG identity
  std::uint64_t seed = 0;
  int partitions = 0;
  int max_steps = 0;
  long trials = 0;
  long caught = 0;
  long escaped = 0;
  long truncated = 0;  // max_steps reached or finite strategy exhausted
  // Over the caught and escaped trials; the duration is the terminal step.
  double mean_duration = 0;
  double duration_variance = 0;  // unbiased sample variance
  std::vector<long> histogram;   // histogram[k] trials ending at step k

  double escape_frequency() const;
  double duration_stderr() const;
  double escape_stderr() const;
};

// Plays `trials` independent games: uniform start box, then per step open a
// box (caught if the cat is there) and move the cat by the kernel (escaped
// if it leaves through an exit).
//
// Trials are split into a fixed number of partitions, each with its own
// mt19937_64 seeded from (seed, partition index), so the report does not
// depend on the thread count. Kernel thresholds are converted once to double.
SimReport simulate(const Topology& t, const Strategy& s, const SimConfig& cfg);

struct CrosscheckReport {
  SimReport sim;
  EvalResult exact;
  double duration_diff = 0;  // |simulated - exact midpoint|
  double escape_diff = 0;
  double duration_limit = 0;  // 3 standard errors plus the enclosure half-width
  double escape_limit = 0;
  bool duration_pass = false;
  bool escape_pass = false;
  bool pass() const { return duration_pass && escape_pass; }
};

// Simulated against exact mean duration and escape rate, within three
// standard errors. Evaluation errors propagate.
CrosscheckReport crosscheck(const Topology& t, const Strategy& s, const SimConfig& cfg);

std::string report_to_json(const SimReport& r);
std::string histogram_csv(const SimReport& r);
std::string crosscheck_to_json(const CrosscheckReport& r);

}  // namespace catbox

#endif  // CATBOX_MONTECARLO_HPP
