#include "doctest.h"

#include "catbox/montecarlo.hpp"

#include <cmath>

using namespace catbox;

namespace {

SimConfig config(long trials, std::uint64_t seed) {
  SimConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("two boxes end by step two") {
  const auto t = Topology::parse("line:2");
  const auto r = simulate(t, parse_strategy("11", t), config(100000, 3));
  CHECK(r.caught == r.trials);
  CHECK(r.escaped == 0);
  CHECK(r.truncated == 0);
  REQUIRE(r.histogram.size() == 3);
  CHECK(r.histogram[1] + r.histogram[2] == r.trials);
  CHECK(std::abs(r.mean_duration - 1.5) < 3 * r.duration_stderr());
}

TEST_CASE("counts add up and the mean lies in the support") {
  const auto t = Topology::parse("line:5:exits");
  const auto r = simulate(t, parse_strategy("142525(141)", t), config(50000, 11));
  CHECK(r.caught + r.escaped + r.truncated == r.trials);
  long total = 0;
  std::size_t first = 0;
  for (std::size_t k = 1; k < r.histogram.size(); ++k) {
    total += r.histogram[k];
    if (first == 0 && r.histogram[k] > 0) first = k;
  }
  CHECK(total == r.caught + r.escaped);
  CHECK(r.mean_duration >= static_cast<double>(first));
  CHECK(r.mean_duration <= static_cast<double>(r.histogram.size() - 1));
}

TEST_CASE("a finite strategy that runs out truncates") {
  const auto t = Topology::parse("line:4");
  const auto r = simulate(t, parse_strategy("2", t), config(40000, 5));
  CHECK(r.caught == r.histogram[1]);
  CHECK(r.caught + r.truncated == r.trials);
  const double p = static_cast<double>(r.caught) / static_cast<double>(r.trials);
  CHECK(std::abs(p - 0.25) < 3 * std::sqrt(0.25 * 0.75 / static_cast<double>(r.trials)));
}

TEST_CASE("reports are reproducible") {
  const auto t = Topology::parse("ring:6");
  const auto s = parse_strategy("(14414114)", t);
  auto cfg = config(30000, 99);
  const auto a = report_to_json(simulate(t, s, cfg));
  CHECK(a == report_to_json(simulate(t, s, cfg)));
  cfg.threads = 4;
  CHECK(a == report_to_json(simulate(t, s, cfg)));
  cfg.seed = 100;
  CHECK(a != report_to_json(simulate(t, s, cfg)));
}

TEST_CASE("crosscheck against exact values") {
  struct Case {
    const char* spec;
    const char* strategy;
    std::uint64_t seed;
  };
  for (const Case& c : {Case{"line:4", "2332", 1}, Case{"ring:3", "(1)", 7}, Case{"grid:2x2:exits", "(1)", 2},
                        Case{"line:7:exits", "1661(2266)", 42}}) {
    const auto t = Topology::parse(c.spec);
    auto cfg = config(200000, c.seed);
    cfg.threads = 4;
    const auto x = crosscheck(t, parse_strategy(c.strategy, t), cfg);
    CAPTURE(c.spec);
    CHECK(x.pass());
    CHECK(x.sim.truncated == 0);
  }
}

TEST_CASE("simulation errors") {
  const auto t = Topology::parse("line:3");
  CHECK_THROWS_AS(simulate(t, parse_strategy("2", t), config(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(simulate(t, Strategy({5}, {}), config(10, 1)), std::invalid_argument);
  CHECK_THROWS_AS(crosscheck(t, parse_strategy("1", t), config(10, 1)), UnresolvedStrategy);
}
