#include "catbox/tables.hpp"

#include "catbox/formulas.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#ifndef CATBOX_DATA_DIR
#define CATBOX_DATA_DIR "data"
#endif

namespace catbox {

bool TableReport::pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return !results.empty();
}

std::vector<std::string> TableReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results) {
    if (!r.pass) out.push_back(r.cell.id);
  }
  return out;
}

std::string default_tables_path() { return std::string(CATBOX_DATA_DIR) + "/tables.json"; }

std::vector<TableCell> load_table_cells(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table data " + path);
  const auto doc = nlohmann::json::parse(in);
  if (doc.value("schema", 0) != 1) throw std::runtime_error("unsupported table data schema in " + path);
  std::vector<TableCell> cells;
  for (const auto& j : doc.at("cells")) {
    TableCell c;
    c.table = j.at("table").get<std::string>();
    c.id = j.at("id").get<std::string>();
    c.op = j.at("op").get<std::string>();
    c.kind = j.at("kind").get<std::string>();
    c.expected = j.at("expected").get<std::string>();
    c.tolerance = j.value("tolerance", 0.0);
    c.note = j.value("note", "");
    if (j.contains("params")) c.params = j.at("params").get<std::map<std::string, std::string>>();
    if (c.kind != "exact" && c.kind != "decimal") throw std::runtime_error("cell " + c.id + ": bad kind " + c.kind);
    cells.push_back(std::move(c));
  }
  return cells;
}

namespace {

// Either an exact rational or a number with an error half-width.
struct Value {
  std::optional<Rational> exact;
  double approx = 0;
  double halfwidth = 0;

  static Value of(const Rational& r) { return {r, to_double(r), 0}; }
  static Value of(const Quantity& q) {
    if (q.exact()) return of(q.value());
    return {std::nullopt, to_double(q.midpoint()), to_double(q.halfwidth())};
  }
  static Value of(double x) { return {std::nullopt, x, 0}; }
};

const std::string& param(const TableCell& c, const std::string& key) {
  const auto it = c.params.find(key);
  if (it == c.params.end()) throw std::invalid_argument("cell " + c.id + " needs parameter '" + key + "'");
  return it->second;
}

int int_param(const TableCell& c, const std::string& key) { return std::stoi(param(c, key)); }

std::string describe(const Value& v) {
  char buf[64];
  if (v.exact) {
    const std::string text = to_string(*v.exact);
    if (text.size() > 24) return to_decimal(*v.exact, 7) + " (exact)";
    std::snprintf(buf, sizeof buf, " (%s)", to_decimal(*v.exact, 5).c_str());
    return text + buf;
  }
  if (v.halfwidth > 0) {
    std::snprintf(buf, sizeof buf, "%.7f +- %.1e", v.approx, v.halfwidth);
  } else {
    std::snprintf(buf, sizeof buf, "%.7f", v.approx);
  }
  return buf;
}

}  // namespace

const EvalResult& TableComputer::evaluation(const std::string& topology, const std::string& strategy) {
  const std::string key = topology + " " + strategy;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto t = Topology::parse(topology);
  const auto s = parse_strategy(strategy, t);
  EvalResult r;
  try {
    r = evaluate_strategy(t, s);
  } catch (const UnresolvedStrategy&) {
    r = evaluate_certified(t, s);
  }
  return cache_.emplace(key, std::move(r)).first->second;
}

CellResult TableComputer::compute(const TableCell& cell) {
  CellResult out;
  out.cell = cell;
  try {
    Value v;
    const std::string& op = cell.op;
    if (op == "duration" || op == "escape") {
      const auto& r = evaluation(param(cell, "topology"), param(cell, "strategy"));
      v = Value::of(op == "duration" ? r.duration : r.escape_rate);
    } else if (op == "sweep_duration") {
      const int n = int_param(cell, "n");
      v = Value::of(evaluation("line:" + std::to_string(n), format_strategy(sweep_strategy(n))).duration);
    } else if (op == "tltr_escape" || op == "tltr_duration") {
      const int n = int_param(cell, "n");
      const auto t = Topology::parse("line:" + std::to_string(n) + ":exits");
      const auto& r = evaluation(t.spec(), format_strategy(twice_left_twice_right(n), t));
      v = Value::of(op == "tltr_escape" ? r.escape_rate : r.duration);
    } else if (op == "random_escape" || op == "random_duration") {
      const auto r = random_open_solve(int_param(cell, "n"));
      v = Value::of(op == "random_escape" ? r.escape_rate : r.duration);
    } else if (op == "dwell_avg") {
      v = Value::of(e2d_avg(int_param(cell, "m")));
    } else if (op == "profile") {
      const auto t = Topology::parse(param(cell, "topology"));
      const auto s = parse_strategy(param(cell, "strategy"), t);
      auto p = asymptotic_profile(t, s).profile;
      const int advance = cell.params.count("advance") ? int_param(cell, "advance") : 0;
      const MoveKernel k = move_kernel(t);
      for (int j = 0; j < advance; ++j) {
        p[static_cast<std::size_t>(s.cycle()[static_cast<std::size_t>(j) % s.cycle().size()] - 1)] = 0;
        apply_move_numeric(p, k);
        double total = 0;
        for (double x : p) total += x;
        for (double& x : p) x /= total;
      }
      v = Value::of(p.at(static_cast<std::size_t>(int_param(cell, "box") - 1)));
    } else if (op == "cycle_entry") {
      const auto t = Topology::parse(param(cell, "topology"));
      const auto cycle = parse_strategy(param(cell, "cycle"), t).prefix();
      const auto map = cycle_map(t, cycle);
      v = Value::of(map.m(static_cast<std::size_t>(int_param(cell, "to") - 1),
                          static_cast<std::size_t>(int_param(cell, "from") - 1)));
    } else {
      throw std::invalid_argument("unknown operation '" + op + "'");
    }

    out.computed = describe(v);
    if (cell.kind == "exact") {
      if (!v.exact) throw std::runtime_error("exact cell computed only approximately");
      const Rational expected = parse_rational(cell.expected);
      out.diff = std::abs(to_double(*v.exact - expected));
      out.pass = *v.exact == expected;
    } else {
      out.diff = std::abs(v.approx - std::stod(cell.expected)) + v.halfwidth;
      out.pass = out.diff <= cell.tolerance;
    }
  } catch (const std::exception& e) {
    out.error = e.what();
    out.pass = false;
  }
  return out;
}

TableReport reproduce_tables(const std::vector<TableCell>& cells, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    bool known = false;
    for (const auto& c : cells) known = known || c.table == id;
    if (!known) throw std::invalid_argument("unknown table " + id);
  }
  TableComputer computer;
  TableReport report;
  for (const auto& c : cells) {
    bool wanted = ids.empty();
    for (const auto& id : ids) wanted = wanted || c.table == id;
    if (wanted) report.results.push_back(computer.compute(c));
  }
  return report;
}

std::string format_table_report(const TableReport& report) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-26s %-14s %-34s %-10s %s\n", "cell", "expected", "computed", "|diff|", "");
  out << line;
  for (const auto& r : report.results) {
    const std::string status = r.pass ? "ok" : "MISMATCH";
    std::string extra = r.cell.note.empty() ? "" : "  [" + r.cell.note + "]";
    if (!r.error.empty()) extra += "  error: " + r.error;
    std::snprintf(line, sizeof line, "%-26s %-14s %-34s %-10.2e %s", r.cell.id.c_str(), r.cell.expected.c_str(),
                  r.computed.c_str(), r.diff, status.c_str());
    out << line << extra << '\n';
  }
  const auto failed = report.failures();
  out << report.results.size() - failed.size() << " of " << report.results.size() << " cells reproduced\n";
  return out.str();
}

std::string table_report_json(const TableReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["pass"] = report.pass();
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json c;
    c["id"] = r.cell.id;
    c["table"] = r.cell.table;
    c["kind"] = r.cell.kind;
    c["expected"] = r.cell.expected;
    c["computed"] = r.computed;
    c["diff"] = r.diff;
    if (r.cell.kind == "decimal") c["tolerance"] = r.cell.tolerance;
    c["pass"] = r.pass;
    if (!r.cell.note.empty()) c["note"] = r.cell.note;
    if (!r.error.empty()) c["error"] = r.error;
    j["cells"].push_back(std::move(c));
  }
  return j.dump(2);
}

}  // namespace catbox
