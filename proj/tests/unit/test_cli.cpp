#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "catbox");
  std::ostringstream out, err;
  const int code = catbox::run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("eval prints exact and decimal values") {
  const auto r = run({"eval", "line:4", "2332"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "duration = 39/16 (2.43750)"));
  CHECK(contains(r.out, "termination = resolved"));

  const auto cyc = run({"eval", "line:7:exits", "1661(2266)"});
  CHECK(cyc.code == 0);
  CHECK(contains(cyc.out, "escape_rate = 183/784"));
}

TEST_CASE("eval encloses an unfinished prefix") {
  const auto r = run({"eval", "line:5", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "termination = certified"));
  CHECK(contains(r.out, "duration = in ["));
}

TEST_CASE("json output carries the schema") {
  const auto r = run({"eval", "ring:6", "(14414114)", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("duration").at("exact") == "608/141");

  const auto p = run({"presets", "--json"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out).at("schema") == 1);

  const auto f = run({"formula", "e2d_avg", "7", "--json"});
  REQUIRE(f.code == 0);
  CHECK(nlohmann::json::parse(f.out).at("schema") == 1);
}

TEST_CASE("formula") {
  const auto r = run({"formula", "e2d_avg", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1084/329 (3.29483)"));
}

TEST_CASE("search and prove") {
  const auto s = run({"search", "line:5", "--maxdepth", "16"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "44/15"));

  const auto p = run({"prove", "line:5", "(2442)", "--horizon", "3"});
  CHECK(p.code == 0);
}

TEST_CASE("tables") {
  const auto ok = run({"tables", "T2"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "6 of 6 cells reproduced"));

  // the stored 2x3 duration is printed truncated and does not reproduce
  const auto bad = run({"tables", "T11"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "mismatch: T11.m3.duration"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "line:x", "22"}).code == 2);
  CHECK(run({"eval", "line:4", "9"}).code == 2);
  CHECK(run({"tables", "T99"}).code == 2);
  CHECK(run({"formula", "nope"}).code == 2);
  CHECK(run({"search", "line:4", "--maxdepth", "many"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  // half of the cats are never met by (12) on four boxes
  const auto divergent = run({"eval", "line:4", "(12)"});
  CHECK(divergent.code == 1);
  CHECK(contains(divergent.err, "error:"));
}
