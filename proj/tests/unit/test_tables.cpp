#include "doctest.h"

#include "catbox/tables.hpp"

#include "json.hpp"

using namespace catbox;

namespace {

TableCell cell(const std::string& op, const std::string& kind, const std::string& expected,
               std::map<std::string, std::string> params, double tolerance = 0) {
  TableCell c;
  c.table = "X";
  c.id = "X." + op;
  c.op = op;
  c.kind = kind;
  c.expected = expected;
  c.tolerance = tolerance;
  c.params = std::move(params);
  return c;
}

}  // namespace

TEST_CASE("stored data loads") {
  const auto cells = load_table_cells(default_tables_path());
  CHECK(cells.size() > 100);
  for (const auto& c : cells) {
    CHECK(!c.id.empty());
    if (c.kind == "decimal") CHECK(c.tolerance > 0);
  }
}

TEST_CASE("cell operations") {
  TableComputer computer;
  CHECK(computer.compute(cell("duration", "exact", "39/16", {{"topology", "line:4"}, {"strategy", "2332"}})).pass);
  CHECK(computer.compute(cell("sweep_duration", "exact", "71/20", {{"n", "5"}})).pass);
  CHECK(computer.compute(cell("random_escape", "exact", "8/21", {{"n", "3"}})).pass);
  CHECK(computer.compute(cell("tltr_escape", "exact", "11/51", {{"n", "9"}})).pass);
  CHECK(computer.compute(cell("dwell_avg", "exact", "52/21", {{"m", "3"}})).pass);
  CHECK(computer.compute(cell("cycle_entry", "exact", "5/16",
                              {{"topology", "line:7:exits"}, {"cycle", "2662"}, {"to", "4"}, {"from", "4"}}))
            .pass);
  CHECK(computer
            .compute(cell("profile", "decimal", "0.30233", {{"topology", "ring:5"}, {"strategy", "(13524)"}, {"box", "1"}},
                          5e-6))
            .pass);

  const auto wrong = computer.compute(cell("duration", "exact", "5/2", {{"topology", "line:4"}, {"strategy", "2332"}}));
  CHECK(!wrong.pass);
  CHECK(wrong.diff == doctest::Approx(1.0 / 16));

  // an enclosure counts its half-width against the tolerance
  const auto loose =
      computer.compute(cell("duration", "decimal", "2.38", {{"topology", "line:5"}, {"strategy", "2"}}, 1e-3));
  CHECK(!loose.pass);
  CHECK(loose.error.empty());
}

TEST_CASE("cell errors are reported, not thrown") {
  TableComputer computer;
  const auto unknown = computer.compute(cell("nonsense", "exact", "1", {}));
  CHECK(!unknown.pass);
  CHECK(!unknown.error.empty());
  const auto missing = computer.compute(cell("duration", "exact", "1", {{"topology", "line:4"}}));
  CHECK(!missing.pass);
  CHECK(missing.error.find("strategy") != std::string::npos);
}

TEST_CASE("reports") {
  const auto cells = load_table_cells(default_tables_path());
  const auto t2 = reproduce_tables(cells, {"T2"});
  CHECK(t2.results.size() == 6);
  CHECK(t2.pass());
  CHECK(format_table_report(t2).find("6 of 6 cells reproduced") != std::string::npos);
  const auto j = nlohmann::json::parse(table_report_json(t2));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("pass") == true);
  CHECK(j.at("cells").size() == 6);

  CHECK_THROWS_AS(reproduce_tables(cells, {"T99"}), std::invalid_argument);
  CHECK_THROWS(load_table_cells("/nonexistent/tables.json"));
}
