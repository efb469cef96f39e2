#ifndef CATBOX_TABLES_HPP
#define CATBOX_TABLES_HPP

#include "catbox/evaluate.hpp"

#include <map>
#include <string>
#include <vector>

namespace catbox {

// One stored table value and the recipe that recomputes it.
struct TableCell {
  std::string table;     // "T1" .. "T11"
  std::string id;        // e.g. "T5.n7.escape"
  std::string op;        // see compute_cell
  std::string kind;      // "exact" or "decimal"
  std::string expected;  // "p/q" for exact cells, a decimal otherwise
  double tolerance = 0;  // decimal cells only
  std::string note;
  std::map<std::string, std::string> params;
};

struct CellResult {
  TableCell cell;
  std::string computed;
  double diff = 0;
  bool pass = false;
  std::string error;
};

struct TableReport {
  std::vector<CellResult> results;
  bool pass() const;
  std::vector<std::string> failures() const;
};

// Cells are stored as JSON: {"schema": 1, "cells": [...]}.
std::vector<TableCell> load_table_cells(const std::string& path);
std::string default_tables_path();

// Operations:
//   duration, escape       topology, strategy (finite prefixes are enclosed)
//   sweep_duration         n
//   random_escape, random_duration   n
//   tltr_escape, tltr_duration       n (line with exits)
//   dwell_avg              m
//   profile                topology, strategy, box, advance (cycle steps after entry)
//   cycle_entry            topology, cycle, to, from
// Exact cells compare as rationals; decimal cells pass when the value (the
// enclosure midpoint plus half-width for enclosures) is within tolerance.
class TableComputer {
 public:
  CellResult compute(const TableCell& cell);

 private:
  const EvalResult& evaluation(const std::string& topology, const std::string& strategy);
  std::map<std::string, EvalResult> cache_;
};

// Cells of the listed tables ("T1" ..), or all cells when `ids` is empty.
TableReport reproduce_tables(const std::vector<TableCell>& cells, const std::vector<std::string>& ids);

std::string format_table_report(const TableReport& report);
std::string table_report_json(const TableReport& report);

}  // namespace catbox

#endif  // CATBOX_TABLES_HPP
