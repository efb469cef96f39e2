#include "catbox/search.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace catbox {

namespace mp = boost::multiprecision;

namespace {

constexpr double kSlack = 1e-9;
constexpr std::size_t kMaxOptima = 5000;

struct IntMove {
  int to;  // 0-based
  long weight;
};

struct NumMove {
  int to;  // 0-based, -1 for escape
  double p;
};

// Read-only data shared by every worker.
struct Context {
  Topology topo;
  SearchConfig cfg;
  int n = 0;
  long denom = 1;  // L
  std::vector<std::vector<IntMove>> moves;
  std::vector<long> escape;
  std::vector<std::vector<NumMove>> num_moves;
  std::vector<mpz_class> scale;               // N L^t for t = 0..maxdepth
  std::vector<std::vector<int>> group;        // non-identity symmetries, 0-based
  int min_repeat_depth = 0;
  bool all_optima = false;
};

Context make_context(const Topology& t, const SearchConfig& cfg) {
  Context c{t, cfg, 0, 1, {}, {}, {}, {}, {}, 0, false};
  c.n = t.boxes();
  const MoveKernel k = move_kernel(t);
  c.denom = k.common_denominator();
  c.moves.resize(static_cast<std::size_t>(c.n));
  c.escape.assign(static_cast<std::size_t>(c.n), 0);
  c.num_moves.resize(static_cast<std::size_t>(c.n));
  for (BoxId b = 1; b <= c.n; ++b) {
    const auto j = static_cast<std::size_t>(b - 1);
    for (const Move& m : k.from(b)) {
      const Rational w = m.probability * c.denom;
      const long weight = w.get_num().get_si();
      if (m.to == kEscape) {
        c.escape[j] += weight;
      } else {
        c.moves[j].push_back({m.to - 1, weight});
      }
      c.num_moves[j].push_back({m.to == kEscape ? -1 : m.to - 1, m.probability.get_d()});
    }
  }
  mpz_class s = c.n;
  for (int d = 0; d <= cfg.maxdepth; ++d) {
    c.scale.push_back(s);
    s *= c.denom;
  }
  const auto perms = symmetries(t);
  for (std::size_t g = 1; g < perms.size(); ++g) {
    std::vector<int> p(static_cast<std::size_t>(c.n));
    for (int b = 1; b <= c.n; ++b) p[static_cast<std::size_t>(b - 1)] = perms[g][static_cast<std::size_t>(b)] - 1;
    c.group.push_back(std::move(p));
  }
  c.min_repeat_depth = static_cast<int>(cfg.root.size());
  c.all_optima = cfg.all_optima_within.has_value();
  return c;
}

bool better(const SearchCandidate& a, const SearchCandidate& b, Objective o) {
  const Rational& pa = objective_value(a.eval, o);
  const Rational& pb = objective_value(b.eval, o);
  if (pa != pb) return pa < pb;
  if (o == Objective::MinEscape) {
    const Rational& da = a.eval.duration.value();
    const Rational& db = b.eval.duration.value();
    if (da != db) return da < db;
  }
  return sequence_less(a.strategy, b.strategy);
}

// Mutable state shared between workers; guarded by `mu` except for the atomics.
struct Shared {
  std::mutex mu;
  std::atomic<unsigned long> version{0};
  std::atomic<bool> stop{false};
  std::atomic<long> nodes{0};
  std::optional<SearchCandidate> best;
  std::vector<SearchCandidate> optima;
  std::unordered_set<std::string> optima_keys;
  bool optima_truncated = false;
  std::optional<SearchCandidate> counterexample;
  std::optional<SearchCandidate> tie;
  bool aborted = false;
};

struct Stats {
  long nodes = 0;
  long pruned = 0;
  long frontier = 0;
  int deepest_cut = 0;
  bool pruned_by_cap = false;
  std::optional<mpz_class> frontier_min;  // numerator over scale[maxdepth]
};

// Floor and ceiling of r * scale[t] for every depth, so that an integer
// numerator x over scale[t] compares with r without leaving the integers.
template <class Int>
struct Bound {
  bool set = false;
  std::vector<Int> floor;
  std::vector<Int> ceil;
  double approx = 0.0;

  void assign(const Rational& r, const std::vector<mpz_class>& scale) {
    set = true;
    approx = r.get_d();
    floor.clear();
    ceil.clear();
    for (const mpz_class& s : scale) {
      const mpz_class num = r.get_num() * s;
      mpz_class f;
      mpz_class c;
      mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
      mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
      floor.emplace_back(f.get_str().c_str());
      ceil.emplace_back(c.get_str().c_str());
    }
  }

  // Sign of x / scale[t] - r.
  int compare(const Int& x, int t) const {
    const auto i = static_cast<std::size_t>(t);
    if (x < ceil[i]) return -1;
    if (x > floor[i]) return 1;
    return 0;
  }
};

template <class Int>
mpz_class to_mpz(const Int& x) {
  return mpz_class(x.str());
}

struct NumericValue {
  double duration = 0.0;
  double escape = 0.0;
  bool ok = false;
};

// Floating-point version of evaluate_continuation, used to discard hopeless
// candidates before the exact evaluation.
NumericValue numeric_continuation(const Context& c, const std::vector<double>& v, double weighted, double escaped,
                                  int steps_done, const std::vector<BoxId>& cycle) {
  const std::size_t n = v.size();
  std::vector<double> m(n * n, 0.0);
  std::vector<double> cw(n, 0.0);
  std::vector<double> ew(n, 0.0);
  std::vector<double> dw(n, 0.0);
  std::vector<double> cur(n);
  std::vector<double> next(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(cur.begin(), cur.end(), 0.0);
    cur[j] = 1.0;
    int offset = 0;
    for (BoxId b : cycle) {
      ++offset;
      const auto opened = static_cast<std::size_t>(b - 1);
      const double caught = cur[opened];
      cur[opened] = 0.0;
      double esc = 0.0;
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (cur[i] == 0.0) continue;
        for (const NumMove& mv : c.num_moves[i]) {
          if (mv.to < 0) {
            esc += cur[i] * mv.p;
          } else {
            next[static_cast<std::size_t>(mv.to)] += cur[i] * mv.p;
          }
        }
      }
      cur.swap(next);
      cw[j] += caught;
      ew[j] += esc;
      dw[j] += offset * (caught + esc);
    }
    for (std::size_t i = 0; i < n; ++i) m[i * n + j] = cur[i];
  }

  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] != 0.0) {
      seen[j] = true;
      queue.push_back(j);
    }
  }
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen[i] && m[i * n + j] != 0.0) {
        seen[i] = true;
        queue.push_back(i);
      }
    }
  }
  std::vector<std::size_t> sup;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) sup.push_back(i);
  }
  const std::size_t k = sup.size();
  std::vector<double> a(k * k);
  std::vector<double> x(k);
  for (std::size_t r = 0; r < k; ++r) {
    x[r] = v[sup[r]];
    for (std::size_t q = 0; q < k; ++q) a[r * k + q] = (r == q ? 1.0 : 0.0) - m[sup[r] * n + sup[q]];
  }
  // LU with partial pivoting
  std::vector<std::size_t> piv(k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(a[r * k + col]) > std::abs(a[best * k + col])) best = r;
    }
    if (std::abs(a[best * k + col]) < 1e-12) return {};
    piv[col] = best;
    if (best != col) {
      for (std::size_t q = 0; q < k; ++q) std::swap(a[col * k + q], a[best * k + q]);
    }
    for (std::size_t r = col + 1; r < k; ++r) {
      const double f = a[r * k + col] / a[col * k + col];
      a[r * k + col] = f;
      for (std::size_t q = col + 1; q < k; ++q) a[r * k + q] -= f * a[col * k + q];
    }
  }
  auto solve = [&](std::vector<double> b) {
    for (std::size_t col = 0; col < k; ++col) {
      std::swap(b[col], b[piv[col]]);
      for (std::size_t r = col + 1; r < k; ++r) b[r] -= a[r * k + col] * b[col];
    }
    for (std::size_t r = k; r-- > 0;) {
      for (std::size_t q = r + 1; q < k; ++q) b[r] -= a[r * k + q] * b[q];
      b[r] /= a[r * k + r];
    }
    return b;
  };
  x = solve(x);
  std::vector<double> mx(k, 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t q = 0; q < k; ++q) mx[r] += m[sup[r] * n + sup[q]] * x[q];
  }
  const std::vector<double> y = solve(mx);

  NumericValue out;
  out.ok = true;
  out.duration = weighted;
  out.escape = escaped;
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t i = sup[r];
    const double term = cw[i] + ew[i];
    out.duration += steps_done * term * x[r] + static_cast<double>(cycle.size()) * term * y[r] + dw[i] * x[r];
    out.escape += ew[i] * x[r];
  }
  return out;
}

template <class Int, class Wide>
class Engine {
 public:
  Engine(const Context& c, Shared& shared) : c_(c), sh_(shared) {
    const auto depth = static_cast<std::size_t>(c.cfg.maxdepth) + 1;
    levels_.resize(depth);
    for (auto& l : levels_) {
      l.box.assign(static_cast<std::size_t>(c.n), Int(0));
      l.norm.assign(static_cast<std::size_t>(c.n), 0.0);
    }
    path_.assign(depth, 0);
    Level& root = levels_[0];
    for (auto& x : root.box) x = 1;
    root.r = c.n;
    root.e = 0;
    root.w = 0;
    normalize(0);
    refresh();
  }

  // Replays `forced` without any checks and returns its depth.
  int replay(const std::vector<BoxId>& forced) {
    int t = 0;
    for (BoxId b : forced) {
      step(t, b - 1);
      ++t;
      normalize(t);
    }
    return t;
  }

  // Full treatment of the node at depth t: checks, then children.
  void visit_root(int t) {
    if (t == 0) {
      expand(0);
    } else {
      visit(t);
    }
  }

  void expand(int t) {
    std::vector<int> kids = children(t);
    for (int b : kids) {
      if (sh_.stop.load(std::memory_order_relaxed)) return;
      step(t, b);
      visit(t + 1);
    }
  }

  void set_split(int depth, std::vector<std::vector<BoxId>>* tasks) {
    split_depth_ = depth;
    tasks_ = tasks;
  }

  const Stats& stats() const { return stats_; }

 private:
  struct Level {
    std::vector<Int> box;
    Int r;  // mass in boxes
    Int e;  // escaped mass
    Int w;  // sum of step index times terminated mass
    std::vector<double> norm;
  };

  void step(int t, int b) {
    const Level& cur = levels_[static_cast<std::size_t>(t)];
    Level& nxt = levels_[static_cast<std::size_t>(t) + 1];
    for (auto& x : nxt.box) x = 0;
    Int esc = 0;
    for (int j = 0; j < c_.n; ++j) {
      if (j == b) continue;
      const Int& v = cur.box[static_cast<std::size_t>(j)];
      if (v == 0) continue;
      for (const IntMove& mv : c_.moves[static_cast<std::size_t>(j)]) {
        nxt.box[static_cast<std::size_t>(mv.to)] += v * mv.weight;
      }
      const long ew = c_.escape[static_cast<std::size_t>(j)];
      if (ew != 0) esc += v * ew;
    }
    const Int caught = cur.box[static_cast<std::size_t>(b)] * c_.denom;
    nxt.r = cur.r * c_.denom - caught - esc;
    nxt.e = cur.e * c_.denom + esc;
    nxt.w = cur.w * c_.denom + (caught + esc) * (t + 1);
    path_[static_cast<std::size_t>(t)] = b + 1;
  }

  void normalize(int t) {
    Level& l = levels_[static_cast<std::size_t>(t)];
    if (l.r == 0) return;
    const double total = static_cast<double>(l.r);
    for (std::size_t i = 0; i < l.box.size(); ++i) l.norm[i] = static_cast<double>(l.box[i]) / total;
  }

  Int duration_bound(int t) const {
    const Level& l = levels_[static_cast<std::size_t>(t)];
    return l.w + l.r * (t + 1);
  }

  // With lookahead: the next opening catches at most the fullest box and the
  // next move lets out at most the mass next to the exits, so everything else
  // terminates at step t + 2 or later.
  Int duration_bound(int t, bool lookahead) const {
    Int lb = duration_bound(t);
    if (!lookahead) return lb;
    const Level& l = levels_[static_cast<std::size_t>(t)];
    Int top = 0;
    Int leaving = 0;
    for (int i = 0; i < c_.n; ++i) {
      const Int& x = l.box[static_cast<std::size_t>(i)];
      if (x > top) top = x;
      const long e = c_.escape[static_cast<std::size_t>(i)];
      if (e != 0) leaving += x * e;
    }
    // leaving is scaled by L relative to the box numerators
    Int rest = (l.r - top) * c_.denom - leaving;
    if (rest > 0) lb += rest / c_.denom;
    return lb;
  }

  // With lookahead: the next move lets out the exit mass of every box except
  // the one opened.
  Int escape_bound(int t, bool lookahead) const {
    const Level& l = levels_[static_cast<std::size_t>(t)];
    if (!lookahead) return l.e;
    Int total = 0;
    Int top = 0;
    for (int i = 0; i < c_.n; ++i) {
      const long e = c_.escape[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      const Int part = l.box[static_cast<std::size_t>(i)] * e;
      total += part;
      if (part > top) top = part;
    }
    return l.e + (total - top) / c_.denom;
  }

  Int primary_bound(int t) const {
    return c_.cfg.objective == Objective::MinDuration ? duration_bound(t, c_.cfg.lookahead_bound)
                                                      : escape_bound(t, c_.cfg.lookahead_bound);
  }

  void refresh() {
    const unsigned long v = sh_.version.load(std::memory_order_acquire);
    if (v == seen_version_ && initialized_) return;
    std::lock_guard<std::mutex> lock(sh_.mu);
    seen_version_ = sh_.version.load(std::memory_order_relaxed);
    initialized_ = true;
    has_best_ = sh_.best.has_value();
    cap_.set = false;
    std::optional<Rational> cap = c_.cfg.incumbent;
    if (has_best_) {
      const SearchCandidate& b = *sh_.best;
      best_primary_.assign(objective_value(b.eval, c_.cfg.objective), c_.scale);
      if (c_.cfg.objective == Objective::MinEscape) best_duration_.assign(b.eval.duration.value(), c_.scale);
      best_seq_ = b.strategy.openings(c_.cfg.maxdepth + 1);
      if (c_.all_optima && !c_.cfg.refute) {
        const Rational limit = objective_value(b.eval, c_.cfg.objective) + *c_.cfg.all_optima_within;
        if (!cap || limit < *cap) cap = limit;
      }
    }
    if (cap) cap_.assign(*cap, c_.scale);
  }

  bool lex_possible(int t) const {
    for (int i = 0; i < t; ++i) {
      if (static_cast<std::size_t>(i) >= best_seq_.size()) return false;
      const BoxId a = path_[static_cast<std::size_t>(i)];
      const BoxId b = best_seq_[static_cast<std::size_t>(i)];
      if (a != b) return a < b;
    }
    return true;
  }

  bool prune(int t) {
    const Int p = primary_bound(t);
    if (cap_.set && cap_.compare(p, t) > 0) {
      stats_.pruned_by_cap = true;
      return true;
    }
    if (c_.cfg.refute || c_.all_optima || !has_best_) return false;
    const int cp = best_primary_.compare(p, t);
    if (cp != 0) return cp > 0;
    if (c_.cfg.objective == Objective::MinEscape) {
      const int cd = best_duration_.compare(duration_bound(t, c_.cfg.lookahead_bound), t);
      if (cd != 0) return cd > 0;
    }
    return !lex_possible(t);
  }

  void visit(int t) {
    ++stats_.nodes;
    if (c_.cfg.node_limit > 0 && sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 >= c_.cfg.node_limit) {
      std::lock_guard<std::mutex> lock(sh_.mu);
      sh_.aborted = true;
      sh_.stop = true;
      return;
    }
    refresh();
    Level& l = levels_[static_cast<std::size_t>(t)];
    if (l.r == 0) {
      offer(t, {}, "finite");
      cut(t);
      return;
    }
    if (prune(t)) {
      ++stats_.pruned;
      cut(t);
      return;
    }
    normalize(t);
    if (repeats(t)) {
      cut(t);
      return;
    }
    periodic(t);
    if (t >= c_.cfg.maxdepth) {
      ++stats_.frontier;
      const mpz_class lb = to_mpz(primary_bound(t));
      if (!stats_.frontier_min || lb < *stats_.frontier_min) stats_.frontier_min = lb;
      return;
    }
    if (tasks_ != nullptr && t == split_depth_) {
      tasks_->emplace_back(path_.begin(), path_.begin() + t);
      return;
    }
    expand(t);
  }

  void cut(int t) { stats_.deepest_cut = std::max(stats_.deepest_cut, t); }

  // Boxes worth opening at the node: non-empty, and the smallest of their
  // orbit under the symmetries that fix the current distribution.
  std::vector<int> children(int t) const {
    const Level& l = levels_[static_cast<std::size_t>(t)];
    std::vector<const std::vector<int>*> stab;
    const bool reduce = c_.cfg.symmetry_reduction && (t == 0 || !c_.all_optima);
    if (reduce) {
      for (const auto& g : c_.group) {
        bool fixed = true;
        for (int i = 0; i < c_.n && fixed; ++i) {
          fixed = l.box[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] == l.box[static_cast<std::size_t>(i)];
        }
        if (fixed) stab.push_back(&g);
      }
    }
    std::vector<int> out;
    for (int b = 0; b < c_.n; ++b) {
      if (l.box[static_cast<std::size_t>(b)] == 0) continue;
      bool rep = true;
      for (const auto* g : stab) {
        if ((*g)[static_cast<std::size_t>(b)] < b) {
          rep = false;
          break;
        }
      }
      if (rep) out.push_back(b);
    }
    return out;
  }

  // Exact scaled repetition of the distribution seen p steps earlier on the
  // current line; promotes the repeated segment to a cycle.
  bool repeats(int t) {
    const Level& l = levels_[static_cast<std::size_t>(t)];
    for (int p = 1; p <= c_.cfg.max_period; ++p) {
      const int t0 = t - p;
      if (t0 < c_.min_repeat_depth) break;
      const Level& a = levels_[static_cast<std::size_t>(t0)];
      bool close = true;
      for (int i = 0; i < c_.n && close; ++i) {
        close = std::abs(a.norm[static_cast<std::size_t>(i)] - l.norm[static_cast<std::size_t>(i)]) < 1e-9;
      }
      if (!close) continue;
      const Wide ra(a.r);
      const Wide rl(l.r);
      bool exact = true;
      for (int i = 0; i < c_.n && exact; ++i) {
        exact = Wide(l.box[static_cast<std::size_t>(i)]) * ra == Wide(a.box[static_cast<std::size_t>(i)]) * rl;
      }
      if (!exact) continue;
      std::vector<BoxId> cycle(path_.begin() + t0, path_.begin() + t);
      offer(t, cycle, "repetition");
      return true;
    }
    return false;
  }

  void periodic(int t) {
    for (int p = 1; p <= c_.cfg.max_period && 2 * p <= t; ++p) {
      const auto first = path_.begin() + (t - 2 * p);
      const auto second = path_.begin() + (t - p);
      if (!std::equal(first, second, second)) continue;
      bool primitive = true;
      for (int q = 1; q < p && primitive; ++q) {
        if (p % q != 0) continue;
        primitive = !std::equal(second, second + (p - q), second + q);
      }
      if (!primitive) continue;
      offer(t, std::vector<BoxId>(second, second + p), "periodic");
    }
  }

  Distribution exact_state(int t, Rational& weighted) const {
    const Level& l = levels_[static_cast<std::size_t>(t)];
    const mpz_class& s = c_.scale[static_cast<std::size_t>(t)];
    auto q = [&s](const Int& x) {
      Rational r(to_mpz(x), s);
      r.canonicalize();
      return r;
    };
    Distribution d;
    for (const Int& x : l.box) d.inbox.push_back(q(x));
    d.escaped = q(l.e);
    d.caught = 1 - d.remaining() - d.escaped;
    weighted = q(l.w);
    return d;
  }

  bool worth_exact(const NumericValue& v) const {
    const double primary = c_.cfg.objective == Objective::MinDuration ? v.duration : v.escape;
    if (cap_.set && primary > cap_.approx + kSlack) return false;
    if (c_.cfg.refute || !has_best_) return true;
    if (c_.all_optima) return true;
    if (primary > best_primary_.approx + kSlack) return false;
    if (c_.cfg.objective == Objective::MinEscape && primary > best_primary_.approx - kSlack &&
        v.duration > best_duration_.approx + kSlack) {
      return false;
    }
    return true;
  }

  void offer(int t, const std::vector<BoxId>& cycle, const char* source) {
    const Level& l = levels_[static_cast<std::size_t>(t)];
    const double scale = c_.scale[static_cast<std::size_t>(t)].get_d();
    NumericValue nv;
    if (cycle.empty()) {
      nv = {static_cast<double>(l.w) / scale, static_cast<double>(l.e) / scale, true};
    } else {
      std::vector<double> v(static_cast<std::size_t>(c_.n));
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(l.box[i]) / scale;
      nv = numeric_continuation(c_, v, static_cast<double>(l.w) / scale, static_cast<double>(l.e) / scale, t, cycle);
    }
    if (nv.ok && !worth_exact(nv)) return;

    Strategy strategy = Strategy(std::vector<BoxId>(path_.begin(), path_.begin() + t), cycle).canonical();
    std::string key = format_strategy(strategy, c_.topo);
    if (!evaluated_.insert(key).second) return;

    Rational weighted;
    const Distribution d = exact_state(t, weighted);
    EvalResult eval;
    try {
      eval = evaluate_continuation(c_.topo, d, weighted, t, cycle);
    } catch (const DivergentStrategy&) {
      return;
    }
    SearchCandidate cand{std::move(strategy), std::move(eval), source};
    const Rational& value = objective_value(cand.eval, c_.cfg.objective);

    std::lock_guard<std::mutex> lock(sh_.mu);
    if (c_.cfg.refute) {
      if (value < *c_.cfg.incumbent) {
        if (!sh_.counterexample || better(cand, *sh_.counterexample, c_.cfg.objective)) sh_.counterexample = cand;
        sh_.stop = true;
      } else if (value == *c_.cfg.incumbent && (!sh_.tie || better(cand, *sh_.tie, c_.cfg.objective))) {
        sh_.tie = cand;
      }
      return;
    }
    if (c_.cfg.incumbent && value > *c_.cfg.incumbent) return;
    bool improved = !sh_.best || better(cand, *sh_.best, c_.cfg.objective);
    if (c_.all_optima) {
      const Rational& reference = improved ? value : objective_value(sh_.best->eval, c_.cfg.objective);
      if (value <= reference + *c_.cfg.all_optima_within && sh_.optima_keys.insert(key).second) {
        if (sh_.optima.size() < kMaxOptima) {
          sh_.optima.push_back(cand);
        } else {
          sh_.optima_truncated = true;
        }
      }
    }
    if (improved) {
      sh_.best = std::move(cand);
      sh_.version.fetch_add(1, std::memory_order_release);
    }
  }

  const Context& c_;
  Shared& sh_;
  std::vector<Level> levels_;
  std::vector<BoxId> path_;
  Stats stats_;
  std::unordered_set<std::string> evaluated_;
  unsigned long seen_version_ = 0;
  bool initialized_ = false;
  bool has_best_ = false;
  Bound<Int> best_primary_;
  Bound<Int> best_duration_;
  Bound<Int> cap_;
  std::vector<BoxId> best_seq_;
  int split_depth_ = -1;
  std::vector<std::vector<BoxId>>* tasks_ = nullptr;
};

std::optional<Strategy> warm_start_strategy(const Topology& t) {
  if (t.kind() == TopologyKind::Line && !t.exits() && t.size() >= 3) return sweep_strategy(t.size());
  if (t.kind() == TopologyKind::Line && t.exits() && t.size() >= 4) return twice_left_twice_right(t.size());
  return Strategy({}, {1});
}

void merge(Stats& into, const Stats& s) {
  into.nodes += s.nodes;
  into.pruned += s.pruned;
  into.frontier += s.frontier;
  into.deepest_cut = std::max(into.deepest_cut, s.deepest_cut);
  into.pruned_by_cap = into.pruned_by_cap || s.pruned_by_cap;
  if (s.frontier_min && (!into.frontier_min || *s.frontier_min < *into.frontier_min)) into.frontier_min = s.frontier_min;
}

template <class Int, class Wide>
Stats run_engine(const Context& c, Shared& shared) {
  const int threads = std::max(1, c.cfg.threads);
  Engine<Int, Wide> head(c, shared);
  const int start = head.replay(c.cfg.root);
  if (threads == 1) {
    head.visit_root(start);
    return head.stats();
  }

  std::vector<std::vector<BoxId>> tasks;
  head.set_split(std::min(start + 2, c.cfg.maxdepth), &tasks);
  head.visit_root(start);
  Stats total = head.stats();

  std::atomic<std::size_t> next{0};
  std::vector<Stats> per(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size() || shared.stop.load()) break;
        Engine<Int, Wide> e(c, shared);
        const int depth = e.replay(tasks[i]);
        e.expand(depth);
        merge(per[static_cast<std::size_t>(w)], e.stats());
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& s : per) merge(total, s);
  return total;
}

}  // namespace

std::string to_string(Objective o) { return o == Objective::MinDuration ? "min-duration" : "min-escape"; }

Objective parse_objective(std::string_view text) {
  if (text == "min-duration" || text == "duration") return Objective::MinDuration;
  if (text == "min-escape" || text == "escape") return Objective::MinEscape;
  throw std::invalid_argument("unknown objective '" + std::string(text) + "'");
}

const Rational& objective_value(const EvalResult& r, Objective objective) {
  return objective == Objective::MinDuration ? r.duration.value() : r.escape_rate.value();
}

Rational lower_bound(const Distribution& d, const Rational& weighted, int step, Objective objective) {
  if (objective == Objective::MinEscape) return d.escaped;
  return weighted + (step + 1) * d.remaining();
}

Rational lower_bound(const StepTrace& trace, int step, Objective objective) {
  Rational weighted = 0;
  for (const auto& r : trace.steps) {
    if (r.step > step) break;
    weighted += r.step * (r.caught + r.escaped);
  }
  return lower_bound(trace.at(step - (trace.steps.empty() ? 0 : trace.steps.front().step - 1)), weighted, step,
                     objective);
}

Strategy symmetric_representative(const Topology& t, const Strategy& s) {
  Strategy best = s.canonical();
  for (const auto& p : symmetries(t)) {
    Strategy image = mirror_strategy(s, p).canonical();
    if (sequence_less(image, best)) best = std::move(image);
  }
  return best;
}

SearchOutcome search_optimal(const Topology& t, const SearchConfig& cfg) {
  if (cfg.maxdepth < 1) throw std::invalid_argument("maxdepth must be at least 1");
  if (cfg.incumbent && *cfg.incumbent <= 0) throw std::invalid_argument("incumbent must be positive");
  if (cfg.objective == Objective::MinEscape && !t.exits()) {
    throw std::invalid_argument("the escape objective needs a topology with exits");
  }
  if (cfg.refute && !cfg.incumbent) throw std::invalid_argument("refutation needs an incumbent");
  if (cfg.all_optima_within && *cfg.all_optima_within < 0) throw std::invalid_argument("epsilon must be >= 0");
  if (cfg.max_period < 1) throw std::invalid_argument("max_period must be at least 1");
  if (static_cast<int>(cfg.root.size()) > cfg.maxdepth) throw std::invalid_argument("root is deeper than maxdepth");
  for (BoxId b : cfg.root) {
    if (!t.contains(b)) throw std::invalid_argument("root opens a box outside " + t.spec());
  }

  const Context c = make_context(t, cfg);
  Shared shared;

  if (cfg.warm_start && !cfg.refute) {
    if (auto w = warm_start_strategy(t)) {
      try {
        EvalResult eval = evaluate_strategy(t, *w);
        const Rational& v = objective_value(eval, cfg.objective);
        if (!cfg.incumbent || v <= *cfg.incumbent) {
          SearchCandidate cand{w->canonical(), std::move(eval), "warm-start"};
          if (cfg.all_optima_within) {
            shared.optima.push_back(cand);
            shared.optima_keys.insert(format_strategy(cand.strategy, t));
          }
          shared.best = std::move(cand);
        }
      } catch (const DivergentStrategy&) {
      }
    }
  }

  long preliminary_nodes = 0;
  if (cfg.warm_start && !cfg.refute && cfg.maxdepth > 12 && cfg.root.empty()) {
    SearchConfig shallow = cfg;
    shallow.maxdepth = cfg.maxdepth / 2;
    shallow.all_optima_within.reset();
    const SearchOutcome pre = search_optimal(t, shallow);
    preliminary_nodes = pre.nodes;
    if (pre.best && (!shared.best || better(*pre.best, *shared.best, cfg.objective))) {
      if (cfg.all_optima_within && shared.optima_keys.insert(format_strategy(pre.best->strategy, t)).second) {
        shared.optima.push_back(*pre.best);
      }
      shared.best = pre.best;
    }
  }

  // numerators stay below N L^t times a small factor; pick a width with room
  // for the cross products of the repetition test
  const double bits = std::log2(static_cast<double>(c.n)) + cfg.maxdepth * std::log2(static_cast<double>(c.denom)) +
                      2.0 * std::log2(cfg.maxdepth + 2.0) + 8.0;
  Stats stats;
  if (bits <= 250) {
    stats = run_engine<mp::int256_t, mp::int512_t>(c, shared);
  } else if (bits <= 500) {
    stats = run_engine<mp::int512_t, mp::int1024_t>(c, shared);
  } else {
    stats = run_engine<mp::cpp_int, mp::cpp_int>(c, shared);
  }

  SearchOutcome out;
  out.nodes = stats.nodes + preliminary_nodes;
  out.pruned = stats.pruned;
  out.frontier = stats.frontier;
  out.deepest_cut = stats.deepest_cut;
  out.aborted = shared.aborted;
  out.counterexample = shared.counterexample;
  out.tie = shared.tie;
  out.best = shared.best;
  if (cfg.refute) out.best.reset();

  std::optional<Rational> lb;
  auto lower = [&lb](const Rational& v) {
    if (!lb || v < *lb) lb = v;
  };
  if (out.best) {
    out.upper_bound = objective_value(out.best->eval, cfg.objective);
    lower(*out.upper_bound);
  }
  if (stats.frontier_min) {
    Rational f(*stats.frontier_min, c.scale.back());
    f.canonicalize();
    lower(f);
  }
  if (stats.pruned_by_cap && cfg.incumbent) lower(*cfg.incumbent);
  out.lower_bound = lb.value_or(Rational(0));

  if (cfg.all_optima_within && out.best) {
    const Rational limit = *out.upper_bound + *cfg.all_optima_within;
    for (auto& cand : shared.optima) {
      if (objective_value(cand.eval, cfg.objective) <= limit) out.optima.push_back(std::move(cand));
    }
    std::sort(out.optima.begin(), out.optima.end(),
              [&cfg](const SearchCandidate& a, const SearchCandidate& b) { return better(a, b, cfg.objective); });
    out.optima_truncated = shared.optima_truncated;
  }

  if (out.best && !out.best->strategy.finite()) {
    const Strategy& s = out.best->strategy;
    out.certificate = find_scaled_repetition(t, s, cfg.max_period, s.prefix_length() + 4 * cfg.max_period);
  }
  if (!out.best && !cfg.refute) out.note = "maxdepth too small to resolve any mass";
  if (out.aborted) out.note = "node limit reached";
  return out;
}

}  // namespace catbox
