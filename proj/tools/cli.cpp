#include "cli.hpp"

#include "catbox/formulas.hpp"
#include "catbox/montecarlo.hpp"
#include "catbox/prove.hpp"
#include "catbox/search.hpp"
#include "catbox/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace catbox {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

// Raised for bad input found after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string exact_text(const Rational& r) { return to_string(r) + " (" + to_decimal(r, 5) + ")"; }

std::string quantity_text(const Quantity& q) {
  if (q.exact()) return exact_text(q.value());
  return "in [" + to_decimal(q.lower, 9) + ", " + to_decimal(q.upper, 9) + "] (" + to_decimal(q.midpoint(), 5) + ")";
}

Json quantity_json(const Quantity& q) {
  if (q.exact()) return {{"exact", to_string(q.value())}, {"decimal", to_double(q.value())}};
  return {{"lower", to_string(q.lower)}, {"upper", to_string(q.upper)}, {"decimal", to_double(q.midpoint())}};
}

Json certificate_json(const RepetitionCertificate& c) {
  return {{"t0", c.t0}, {"period", c.period}, {"factor", to_string(c.factor)}};
}

Json eval_json(const EvalResult& r) {
  Json j;
  j["duration"] = quantity_json(r.duration);
  j["escape_rate"] = quantity_json(r.escape_rate);
  j["caught_rate"] = quantity_json(r.caught_rate);
  j["exact"] = r.exact;
  j["termination"] = r.termination;
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  return j;
}

Topology topology_arg(const std::string& text) {
  try {
    return Topology::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Strategy strategy_arg(const std::string& text, const Topology& t) {
  try {
    return parse_strategy(text, t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("bad ") + what + ": " + text);
  }
}

void print_json(std::ostream& out, Json j) {
  Json doc;
  doc["schema"] = kSchema;
  for (const auto& [key, value] : j.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string topology, strategy, completion;
  bool json = false;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  const auto t = topology_arg(a.topology);
  const auto s = strategy_arg(a.strategy, t);
  EvalResult r;
  if (!a.completion.empty()) {
    r = evaluate_certified(t, s, strategy_arg(a.completion, t));
  } else {
    try {
      r = evaluate_strategy(t, s);
    } catch (const UnresolvedStrategy&) {
      r = evaluate_certified(t, s);
    }
  }
  if (!r.certificate && !s.finite()) r.certificate = find_scaled_repetition(t, s, 12, s.prefix_length() + 48);
  if (a.json) {
    Json j{{"topology", t.spec()}, {"strategy", format_strategy(s, t)}};
    const Json e = eval_json(r);
    for (const auto& [key, value] : e.items()) j[key] = value;
    print_json(out, j);
    return 0;
  }
  out << "duration = " << quantity_text(r.duration) << '\n';
  out << "escape_rate = " << quantity_text(r.escape_rate) << '\n';
  out << "caught_rate = " << quantity_text(r.caught_rate) << '\n';
  out << "termination = " << r.termination << '\n';
  if (r.certificate) {
    out << "repetition = distribution after step " << r.certificate->t0 + r.certificate->period << " is "
        << to_string(r.certificate->factor) << " times the one after step " << r.certificate->t0 << '\n';
  }
  return 0;
}

// --- search ---------------------------------------------------------------

struct SearchArgs {
  std::string topology, objective, incumbent, epsilon, root;
  int maxdepth = 20;
  int threads = 1;
  long node_limit = 0;
  bool no_symmetry = false;
  bool no_warm_start = false;
  bool plain_bounds = false;
  bool json = false;
};

Json candidate_json(const SearchCandidate& c, const Topology& t) {
  Json j{{"strategy", format_strategy(c.strategy, t)}, {"source", c.source}};
  const Json e = eval_json(c.eval);
  for (const auto& [key, value] : e.items()) j[key] = value;
  return j;
}

int run_search(const SearchArgs& a, std::ostream& out) {
  const auto t = topology_arg(a.topology);
  SearchConfig cfg;
  if (!a.objective.empty()) {
    try {
      cfg.objective = parse_objective(a.objective);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    cfg.objective = t.exits() ? Objective::MinEscape : Objective::MinDuration;
  }
  cfg.maxdepth = a.maxdepth;
  cfg.threads = a.threads;
  cfg.node_limit = a.node_limit;
  cfg.symmetry_reduction = !a.no_symmetry;
  cfg.warm_start = !a.no_warm_start;
  cfg.lookahead_bound = !a.plain_bounds;
  if (!a.incumbent.empty()) cfg.incumbent = rational_arg(a.incumbent, "incumbent");
  if (!a.epsilon.empty()) cfg.all_optima_within = rational_arg(a.epsilon, "epsilon");
  if (!a.root.empty()) cfg.root = strategy_arg(a.root, t).prefix();

  SearchOutcome o;
  try {
    o = search_optimal(t, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (a.json) {
    Json j{{"topology", t.spec()}, {"objective", to_string(cfg.objective)}, {"maxdepth", cfg.maxdepth}};
    j["best"] = o.best ? candidate_json(*o.best, t) : Json();
    j["lower_bound"] = to_string(o.lower_bound);
    j["upper_bound"] = o.upper_bound ? Json(to_string(*o.upper_bound)) : Json();
    if (o.certificate) j["certificate"] = certificate_json(*o.certificate);
    if (cfg.all_optima_within) {
      j["optima"] = Json::array();
      for (const auto& c : o.optima) j["optima"].push_back(candidate_json(c, t));
      j["optima_truncated"] = o.optima_truncated;
    }
    j["nodes"] = o.nodes;
    j["pruned"] = o.pruned;
    j["frontier"] = o.frontier;
    j["complete"] = o.complete();
    if (!o.note.empty()) j["note"] = o.note;
    print_json(out, j);
    return 0;
  }
  out << "objective = " << to_string(cfg.objective) << '\n';
  if (o.best) {
    out << "best = " << format_strategy(o.best->strategy, t) << '\n';
    out << "duration = " << quantity_text(o.best->eval.duration) << '\n';
    if (t.exits()) out << "escape_rate = " << quantity_text(o.best->eval.escape_rate) << '\n';
  } else {
    out << "best = none\n";
  }
  out << "lower_bound = " << exact_text(o.lower_bound) << '\n';
  if (o.certificate) {
    out << "repetition = t0 " << o.certificate->t0 << ", period " << o.certificate->period << ", factor "
        << to_string(o.certificate->factor) << '\n';
  }
  if (cfg.all_optima_within) {
    out << "optima = " << o.optima.size() << (o.optima_truncated ? " (truncated)" : "") << '\n';
    for (const auto& c : o.optima) {
      out << "  " << format_strategy(c.strategy, t) << "  " << exact_text(objective_value(c.eval, cfg.objective))
          << '\n';
    }
  }
  out << "nodes = " << o.nodes << ", pruned = " << o.pruned << ", frontier = " << o.frontier
      << (o.complete() ? ", complete" : ", incomplete") << '\n';
  if (!o.note.empty()) out << "note = " << o.note << '\n';
  return 0;
}

// --- prove ----------------------------------------------------------------

struct ProveArgs {
  std::string topology, strategy, objective;
  int horizon = 5;
  int lookahead = 20;
  int threads = 1;
  long node_limit = 0;
  bool plain_bounds = false;
  bool json = false;
};

int run_prove(const ProveArgs& a, std::ostream& out) {
  const auto t = topology_arg(a.topology);
  const auto s = strategy_arg(a.strategy, t);
  ProveConfig cfg;
  if (!a.objective.empty()) {
    try {
      cfg.objective = parse_objective(a.objective);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  cfg.horizon = a.horizon;
  cfg.lookahead = a.lookahead;
  cfg.threads = a.threads;
  cfg.node_limit = a.node_limit;
  cfg.lookahead_bound = !a.plain_bounds;
  OptimalityCertificate c;
  try {
    c = verify_local_optimality(t, s, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (a.json) {
    Json j{{"topology", c.topology},
           {"candidate", format_strategy(c.candidate, t)},
           {"objective", to_string(c.objective)},
           {"value", to_string(c.value)},
           {"horizon", c.horizon},
           {"lookahead", c.lookahead},
           {"certified", c.certified()},
           {"counterexample", c.has_counterexample()},
           {"latest_refutation", c.latest_refutation()}};
    j["records"] = Json::array();
    for (const auto& r : c.records) {
      Json jr{{"step", r.step}, {"alternative", r.alternative}, {"status", to_string(r.status)}};
      if (r.refuted_at > 0) jr["refuted_at"] = r.refuted_at;
      jr["nodes"] = r.nodes;
      if (r.counterexample) jr["completion"] = candidate_json(*r.counterexample, t);
      j["records"].push_back(std::move(jr));
    }
    if (c.repetition) j["repetition"] = certificate_json(*c.repetition);
    j["repetition_within_horizon"] = c.repetition_within_horizon;
    j["repetition_note"] = c.repetition_note;
    print_json(out, j);
    return 0;
  }
  out << "candidate = " << format_strategy(c.candidate, t) << " on " << c.topology << '\n';
  out << "objective = " << to_string(c.objective) << ", value = " << exact_text(c.value) << '\n';
  out << "horizon = " << c.horizon << ", lookahead = " << c.lookahead << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%5s %4s  %-15s %9s %10s  %s\n", "step", "box", "status", "closed_at", "nodes",
                "completion");
  out << line;
  for (const auto& r : c.records) {
    std::string completion;
    if (r.counterexample) {
      completion = format_strategy(r.counterexample->strategy, t) + " " +
                   to_decimal(objective_value(r.counterexample->eval, c.objective), 5);
    }
    std::snprintf(line, sizeof line, "%5d %4d  %-15s %9s %10ld  %s\n", r.step, r.alternative,
                  to_string(r.status).c_str(), r.refuted_at > 0 ? std::to_string(r.refuted_at).c_str() : "-",
                  r.nodes, completion.c_str());
    out << line;
  }
  out << "certified = " << (c.certified() ? "yes" : "no") << '\n';
  out << "latest_refutation = " << c.latest_refutation() << '\n';
  out << "repetition = " << c.repetition_note << '\n';
  return 0;
}

// --- formula --------------------------------------------------------------

int run_formula(const std::string& name, const std::vector<std::string>& raw, bool json, std::ostream& out) {
  std::vector<int> args;
  for (const auto& text : raw) {
    try {
      std::size_t used = 0;
      args.push_back(std::stoi(text, &used));
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("formula arguments must be integers: " + text);
    }
  }
  struct Entry {
    std::size_t arity;
    const char* usage;
  };
  static const std::map<std::string, Entry> table = {
      {"e_save", {1, "e_save N"}},
      {"e_random_closed", {1, "e_random_closed N"}},
      {"e_exit", {2, "e_exit I N"}},
      {"e_exit_avg", {1, "e_exit_avg N"}},
      {"e_sin", {1, "e_sin N"}},
      {"sine_survival", {2, "sine_survival N STEPS"}},
      {"random_open", {1, "random_open N"}},
      {"e_approx", {1, "e_approx N"}},
      {"fib", {1, "fib K"}},
      {"lucas", {1, "lucas K"}},
      {"e2d", {2, "e2d I M"}},
      {"e2d_avg", {1, "e2d_avg M"}},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string names;
    for (const auto& [key, entry] : table) names += (names.empty() ? "" : ", ") + key;
    throw UsageError("unknown formula '" + name + "'; available: " + names);
  }
  if (args.size() != it->second.arity) throw UsageError(std::string("usage: formula ") + it->second.usage);

  Json j{{"formula", name}, {"args", args}};
  std::string text;
  auto exact = [&](const Rational& r) {
    j["exact"] = to_string(r);
    j["decimal"] = to_double(r);
    text = exact_text(r);
  };
  auto numeric = [&](double x) {
    j["decimal"] = x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    text = buf;
  };
  try {
    if (name == "e_save") exact(e_save(args[0]));
    else if (name == "e_random_closed") exact(e_random_closed(args[0]));
    else if (name == "e_exit") exact(Rational(e_exit(args[0], args[1])));
    else if (name == "e_exit_avg") exact(e_exit_avg(args[0]));
    else if (name == "e_sin") numeric(e_sin(args[0]));
    else if (name == "sine_survival") numeric(sine_survival(args[0], args[1]));
    else if (name == "e_approx") numeric(e_approx(args[0]));
    else if (name == "fib") exact(Rational(fib_lucas_ext(SequenceKind::Fibonacci, args[0])));
    else if (name == "lucas") exact(Rational(fib_lucas_ext(SequenceKind::Lucas, args[0])));
    else if (name == "e2d") exact(e2d(args[0], args[1]));
    else if (name == "e2d_avg") exact(e2d_avg(args[0]));
    else if (name == "random_open") {
      const auto r = random_open_solve(args[0]);
      j["escape_rate"] = to_string(r.escape_rate);
      j["duration"] = to_string(r.duration);
      text = "escape_rate = " + exact_text(r.escape_rate) + "\nduration = " + exact_text(r.duration);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    print_json(out, j);
  } else {
    out << text << '\n';
  }
  return 0;
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string topology, strategy, histogram;
  long trials = 1000000;
  std::uint64_t seed = 0;
  int max_steps = 10000;
  int threads = 1;
  bool crosscheck = false;
  bool json = false;
};

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  const auto t = topology_arg(a.topology);
  const auto s = strategy_arg(a.strategy, t);
  SimConfig cfg;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.max_steps = a.max_steps;
  cfg.threads = a.threads;
  int code = 0;
  SimReport report;
  std::optional<CrosscheckReport> check;
  try {
    if (a.crosscheck) {
      check = crosscheck(t, s, cfg);
      report = check->sim;
      code = check->pass() ? 0 : 1;
    } else {
      report = simulate(t, s, cfg);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.histogram.empty()) {
    std::ofstream file(a.histogram);
    if (!file) throw std::runtime_error("cannot write " + a.histogram);
    file << histogram_csv(report);
  }
  if (a.json) {
    out << (check ? crosscheck_to_json(*check) : report_to_json(report)) << '\n';
    return code;
  }
  char line[256];
  out << "topology = " << report.topology << ", strategy = " << report.strategy << '\n';
  out << "trials = " << report.trials << ", seed = " << report.seed << ", generator = " << report.generator << '\n';
  out << "caught = " << report.caught << ", escaped = " << report.escaped << ", truncated = " << report.truncated
      << '\n';
  std::snprintf(line, sizeof line, "mean_duration = %.6f +- %.6f\nescape_frequency = %.6f +- %.6f\n",
                report.mean_duration, report.duration_stderr(), report.escape_frequency(), report.escape_stderr());
  out << line;
  if (check) {
    std::snprintf(line, sizeof line, "exact duration = %s, |diff| = %.3g (limit %.3g)\n",
                  to_decimal(check->exact.duration.midpoint(), 6).c_str(), check->duration_diff,
                  check->duration_limit);
    out << line;
    std::snprintf(line, sizeof line, "exact escape_rate = %s, |diff| = %.3g (limit %.3g)\n",
                  to_decimal(check->exact.escape_rate.midpoint(), 6).c_str(), check->escape_diff,
                  check->escape_limit);
    out << line;
    out << "crosscheck = " << (check->pass() ? "pass" : "fail") << '\n';
  }
  return code;
}

// --- tables ---------------------------------------------------------------

int run_tables(const std::vector<std::string>& ids, const std::string& data, bool json, std::ostream& out,
               std::ostream& err) {
  std::vector<TableCell> cells;
  try {
    cells = load_table_cells(data.empty() ? default_tables_path() : data);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  TableReport report;
  try {
    report = reproduce_tables(cells, ids);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    out << table_report_json(report) << '\n';
  } else {
    out << format_table_report(report);
  }
  const auto failed = report.failures();
  for (const auto& id : failed) err << "mismatch: " << id << '\n';
  return failed.empty() ? 0 : 1;
}

// --- trace ----------------------------------------------------------------

int run_trace(const std::string& topology, const std::string& strategy, int steps, bool json, std::ostream& out) {
  const auto t = topology_arg(topology);
  const auto s = strategy_arg(strategy, t);
  if (steps < 0) throw UsageError("steps must be nonnegative");
  if (steps == 0) steps = s.finite() ? s.prefix_length() : s.prefix_length() + 2 * s.cycle_length();
  const auto trace = play_trace(t, s, steps);
  if (!json) {
    out << trace_to_text(trace);
    return 0;
  }
  Json j{{"topology", t.spec()}, {"strategy", format_strategy(s, t)}};
  j["steps"] = Json::array();
  for (const auto& r : trace.steps) {
    Json jr{{"step", r.step}, {"box", r.opened}, {"caught", to_string(r.caught)}, {"escaped", to_string(r.escaped)}};
    Json inbox = Json::array();
    for (const auto& x : r.after.inbox) inbox.push_back(to_string(x));
    jr["inbox"] = std::move(inbox);
    j["steps"].push_back(std::move(jr));
  }
  print_json(out, j);
  return 0;
}

int run_presets(bool json, std::ostream& out) {
  if (json) {
    Json j = Json::array();
    for (const auto& p : presets()) {
      j.push_back({{"name", p.name}, {"topology", p.topology}, {"strategy", p.strategy}, {"description", p.description}});
    }
    print_json(out, Json{{"presets", j}});
    return 0;
  }
  for (const auto& p : presets()) out << p.name << "  " << p.topology << "  " << p.description << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver, prover and simulator for the cat-in-a-box search game", "catbox"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "exact duration, escape and catch rate of a strategy");
  eval->add_option("topology", ea.topology, "e.g. line:5, ring:6, grid:2x4:exits")->required();
  eval->add_option("strategy", ea.strategy, "e.g. 2332, 1661(2266), preset:s8r")->required();
  eval->add_option("--completion", ea.completion, "cycle used to enclose an unfinished prefix");
  eval->add_flag("--json", ea.json);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "branch and prune search for an optimal strategy");
  search->add_option("topology", sa.topology)->required();
  search->add_option("--objective", sa.objective, "min-duration or min-escape (default by topology)");
  search->add_option("--maxdepth", sa.maxdepth, "absolute step limit")->capture_default_str();
  search->add_option("--incumbent", sa.incumbent, "initial threshold p/q");
  search->add_option("--threads", sa.threads)->capture_default_str();
  search->add_option("--all-optima-within", sa.epsilon, "list every strategy within epsilon (p/q) of the best");
  search->add_option("--root", sa.root, "forced first openings");
  search->add_option("--node-limit", sa.node_limit, "0 for unlimited")->capture_default_str();
  search->add_flag("--no-symmetry", sa.no_symmetry);
  search->add_flag("--no-warm-start", sa.no_warm_start);
  search->add_flag("--plain-bounds", sa.plain_bounds, "disable the one-step sharpened bounds");
  search->add_flag("--json", sa.json);

  ProveArgs pa;
  auto* prove = app.add_subcommand("prove", "deviation test of a candidate strategy");
  prove->add_option("topology", pa.topology)->required();
  prove->add_option("strategy", pa.strategy)->required();
  prove->add_option("--objective", pa.objective);
  prove->add_option("--horizon", pa.horizon)->capture_default_str();
  prove->add_option("--lookahead", pa.lookahead)->capture_default_str();
  prove->add_option("--threads", pa.threads)->capture_default_str();
  prove->add_option("--node-limit", pa.node_limit, "per deviation, 0 for unlimited")->capture_default_str();
  prove->add_flag("--plain-bounds", pa.plain_bounds);
  prove->add_flag("--json", pa.json);

  std::string formula_name;
  std::vector<std::string> formula_args;
  bool formula_json = false;
  auto* formula = app.add_subcommand("formula", "closed-form quantities");
  formula->add_option("name", formula_name, "e_save, e_exit, e_exit_avg, e_sin, random_open, e2d, e2d_avg, ...")
      ->required();
  formula->add_option("args", formula_args);
  formula->add_flag("--json", formula_json);

  SimulateArgs ma;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo playouts");
  sim->add_option("topology", ma.topology)->required();
  sim->add_option("strategy", ma.strategy)->required();
  sim->add_option("--trials", ma.trials)->capture_default_str();
  sim->add_option("--seed", ma.seed)->capture_default_str();
  sim->add_option("--max-steps", ma.max_steps)->capture_default_str();
  sim->add_option("--threads", ma.threads)->capture_default_str();
  sim->add_option("--histogram", ma.histogram, "write the duration histogram as CSV");
  sim->add_flag("--crosscheck", ma.crosscheck, "compare with the exact values (3 standard errors)");
  sim->add_flag("--json", ma.json);

  std::vector<std::string> table_ids;
  std::string table_data;
  bool tables_json = false;
  auto* tables = app.add_subcommand("tables", "recompute the stored tables and compare");
  tables->add_option("ids", table_ids, "T1 .. T11; all when omitted");
  tables->add_option("--data", table_data, "table data file");
  tables->add_flag("--json", tables_json);

  std::string trace_topology, trace_strategy;
  int trace_steps = 0;
  bool trace_json = false;
  auto* trace = app.add_subcommand("trace", "step-by-step distributions");
  trace->add_option("topology", trace_topology)->required();
  trace->add_option("strategy", trace_strategy)->required();
  trace->add_option("--steps", trace_steps, "default: prefix plus two cycles");
  trace->add_flag("--json", trace_json);

  bool presets_json = false;
  auto* preset_cmd = app.add_subcommand("presets", "named strategies");
  preset_cmd->add_flag("--json", presets_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*eval) return run_eval(ea, out);
    if (*search) return run_search(sa, out);
    if (*prove) return run_prove(pa, out);
    if (*formula) return run_formula(formula_name, formula_args, formula_json, out);
    if (*sim) return run_simulate(ma, out);
    if (*tables) return run_tables(table_ids, table_data, tables_json, out, err);
    if (*trace) return run_trace(trace_topology, trace_strategy, trace_steps, trace_json, out);
    if (*preset_cmd) return run_presets(presets_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace catbox
