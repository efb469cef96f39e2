#include "doctest.h"

#include "catbox/topology.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <map>

using namespace catbox;

namespace {

oracle::Board board_of(const Topology& t) {
  const auto shape = t.kind() == TopologyKind::Line   ? oracle::Shape::Line
                     : t.kind() == TopologyKind::Ring ? oracle::Shape::Ring
                                                      : oracle::Shape::Grid;
  return {shape, t.size(), t.exits()};
}

}  // namespace

TEST_CASE("topology specs parse and print") {
  for (const char* spec : {"line:5", "line:5:exits", "ring:6", "grid:2x4", "grid:2x4:exits"}) {
    CHECK(Topology::parse(spec).spec() == spec);
  }
  CHECK(Topology::parse("grid:2x3").boxes() == 6);
  CHECK_THROWS_AS(Topology::parse("line:1"), std::invalid_argument);
  CHECK_THROWS_AS(Topology::parse("ring:5:exits"), std::invalid_argument);
  CHECK_THROWS_AS(Topology::parse("grid:3x3"), std::invalid_argument);
  CHECK_THROWS_AS(Topology::parse("line:x"), std::invalid_argument);
  CHECK_THROWS_AS(Topology::parse("cube:3"), std::invalid_argument);
  CHECK_THROWS_AS(Topology::parse("line:4:doors"), std::invalid_argument);
}

TEST_CASE("kernel rows sum to one and match the door model") {
  for (const char* spec : {"line:2", "line:3", "line:6", "line:4:exits", "line:7:exits", "ring:2", "ring:3",
                           "ring:7", "grid:2x2", "grid:2x3", "grid:2x2:exits", "grid:2x4:exits"}) {
    const auto t = Topology::parse(spec);
    const auto k = move_kernel(t);
    const auto g = board_of(t);
    for (BoxId b = 1; b <= t.boxes(); ++b) {
      Rational total = 0;
      std::map<BoxId, Rational> expected;
      const auto d = oracle::doors(g, b);
      for (int to : d) expected[to] += ratio(1, static_cast<long>(d.size()));
      std::map<BoxId, Rational> got;
      for (const auto& m : k.from(b)) {
        total += m.probability;
        got[m.to] += m.probability;
      }
      CAPTURE(spec);
      CAPTURE(b);
      CHECK(total == 1);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("specific kernel entries") {
  const auto line = move_kernel(Topology::parse("line:5"));
  CHECK(line.from(1).size() == 1);
  CHECK(line.from(1)[0].to == 2);
  CHECK(line.from(3)[0].probability == ratio(1, 2));

  const auto exits = move_kernel(Topology::parse("line:5:exits"));
  CHECK(exits.escape_probability(1) == ratio(1, 2));
  CHECK(exits.escape_probability(3) == 0);

  const auto ring2 = move_kernel(Topology::parse("ring:2"));
  REQUIRE(ring2.from(1).size() == 1);
  CHECK(ring2.from(1)[0].probability == 1);

  const auto grid = move_kernel(Topology::parse("grid:2x3"));
  CHECK(grid.from(2).size() == 3);
  CHECK(grid.from(1).size() == 2);
  const auto grid_exits = move_kernel(Topology::parse("grid:2x2:exits"));
  CHECK(grid_exits.escape_probability(1) == ratio(1, 2));
  CHECK(move_kernel(Topology::parse("grid:2x3:exits")).escape_probability(2) == ratio(1, 4));
  CHECK(grid_exits.common_denominator() == 4);
  CHECK(move_kernel(Topology::parse("grid:2x3")).common_denominator() == 6);
}

TEST_CASE("symmetries preserve the kernel") {
  for (const char* spec : {"line:5", "line:6:exits", "ring:5", "ring:6", "grid:2x3", "grid:2x4:exits"}) {
    const auto t = Topology::parse(spec);
    const auto k = move_kernel(t);
    const auto group = symmetries(t);
    CHECK(group.front()[1] == 1);
    for (const auto& p : group) {
      for (BoxId b = 1; b <= t.boxes(); ++b) {
        std::map<BoxId, Rational> image, target;
        for (const auto& m : k.from(b)) image[m.to == kEscape ? kEscape : p[static_cast<std::size_t>(m.to)]] += m.probability;
        for (const auto& m : k.from(p[static_cast<std::size_t>(b)])) target[m.to] += m.probability;
        CHECK(image == target);
      }
    }
  }
  CHECK(symmetries(Topology::parse("line:5")).size() == 2);
  CHECK(symmetries(Topology::parse("ring:6")).size() == 12);
  CHECK(symmetries(Topology::parse("ring:2")).size() == 2);
  CHECK(symmetries(Topology::parse("grid:2x3")).size() == 4);
  CHECK(symmetries(Topology::parse("line:4:exits"))[1] == Permutation{0, 4, 3, 2, 1});
}

TEST_CASE("orbit representatives") {
  CHECK(orbit_representatives(Topology::parse("line:5")) == std::vector<BoxId>{1, 2, 3});
  CHECK(orbit_representatives(Topology::parse("line:6")) == std::vector<BoxId>{1, 2, 3});
  CHECK(orbit_representatives(Topology::parse("ring:7")) == std::vector<BoxId>{1});
  CHECK(orbit_representatives(Topology::parse("grid:2x3")) == std::vector<BoxId>{1, 2});
}
