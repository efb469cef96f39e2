#ifndef CATBOX_TESTS_ORACLES_HPP
#define CATBOX_TESTS_ORACLES_HPP

// Independent reference computations for the tests. Nothing here calls into
// the library: neighbourhoods, propagation and linear solves are re-derived
// from the game rules with different code so a shared bug cannot hide.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

enum class Shape { Line, Ring, Grid };

struct Board {
  Shape shape;
  int size;  // line/ring length or grid column count
  bool exits;

  int boxes() const { return shape == Shape::Grid ? 2 * size : size; }
};

// Equally likely destinations of a cat in box b (1-based); 0 stands for the
// outside. The cat picks one of its doors uniformly; on a line without exits
// an end box has one door only.
inline std::vector<int> doors(const Board& g, int b) {
  std::vector<int> out;
  if (g.shape == Shape::Line) {
    if (b > 1) out.push_back(b - 1);
    else if (g.exits) out.push_back(0);
    if (b < g.size) out.push_back(b + 1);
    else if (g.exits) out.push_back(0);
  } else if (g.shape == Shape::Ring) {
    out.push_back((b + g.size - 2) % g.size + 1);
    out.push_back(b % g.size + 1);
  } else {
    const int row = (b - 1) / g.size;  // 0 upper, 1 lower
    const int col = (b - 1) % g.size;  // 0-based
    auto id = [&](int r, int c) { return r * g.size + c + 1; };
    if (col > 0) out.push_back(id(row, col - 1));
    else if (g.exits) out.push_back(0);
    if (col + 1 < g.size) out.push_back(id(row, col + 1));
    else if (g.exits) out.push_back(0);
    out.push_back(id(1 - row, col));
    if (g.exits) out.push_back(0);
  }
  return out;
}

struct Totals {
  long double duration = 0;  // sum of step * terminated mass
  long double caught = 0;
  long double escaped = 0;
  long double remaining = 1;
};

// Plays the opening sequence produced by open(step) for `steps` rounds in
// long double arithmetic.
template <typename Opener>
Totals propagate(const Board& g, Opener open, int steps) {
  const int n = g.boxes();
  std::vector<long double> p(static_cast<std::size_t>(n) + 1, 1.0L / n);
  p[0] = 0;
  Totals t;
  for (int step = 1; step <= steps; ++step) {
    const int b = open(step);
    const long double hit = p[static_cast<std::size_t>(b)];
    p[static_cast<std::size_t>(b)] = 0;
    std::vector<long double> q(p.size(), 0.0L);
    long double out = 0;
    for (int from = 1; from <= n; ++from) {
      const auto d = doors(g, from);
      const long double share = p[static_cast<std::size_t>(from)] / static_cast<long double>(d.size());
      for (int to : d) {
        if (to == 0) out += share;
        else q[static_cast<std::size_t>(to)] += share;
      }
    }
    p = std::move(q);
    t.caught += hit;
    t.escaped += out;
    t.duration += step * (hit + out);
  }
  t.remaining = 0;
  for (int b = 1; b <= n; ++b) t.remaining += p[static_cast<std::size_t>(b)];
  return t;
}

// Opening sequence from a prefix and a cycle of box numbers.
inline auto opener(std::vector<int> prefix, std::vector<int> cycle) {
  return [prefix = std::move(prefix), cycle = std::move(cycle)](int step) {
    const auto i = static_cast<std::size_t>(step - 1);
    if (i < prefix.size()) return prefix[i];
    if (cycle.empty()) throw std::out_of_range("opening sequence exhausted");
    return cycle[(i - prefix.size()) % cycle.size()];
  };
}

inline std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

// Gauss-Jordan elimination over the rationals with a plain first-nonzero
// pivot. Small systems only.
inline std::vector<mpq_class> gauss_jordan(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular oracle system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Expected number of moves until a randomly walking cat leaves grid:2xm:exits
// from each box, by the absorbing-chain equations E = 1 + Q E.
inline std::vector<mpq_class> grid_exit_times(int m) {
  const Board g{Shape::Grid, m, true};
  const int n = g.boxes();
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(n), std::vector<mpq_class>(n, 0));
  std::vector<mpq_class> rhs(static_cast<std::size_t>(n), 1);
  for (int b = 1; b <= n; ++b) {
    const auto d = doors(g, b);
    auto& row = a[static_cast<std::size_t>(b - 1)];
    row[static_cast<std::size_t>(b - 1)] += 1;
    for (int to : d) {
      if (to != 0) row[static_cast<std::size_t>(to - 1)] -= mpq_class(1, d.size());
    }
  }
  return gauss_jordan(std::move(a), std::move(rhs));
}

// Escape probability per start box when each step opens a uniformly random
// box of line:n:exits, by value iteration on the one-step equations.
inline std::vector<double> random_open_escape(int n, int sweeps = 200000) {
  std::vector<double> e(static_cast<std::size_t>(n) + 2, 0.0);
  e[0] = e[static_cast<std::size_t>(n) + 1] = 1.0;
  const double survive = (n - 1.0) / n;
  for (int it = 0; it < sweeps; ++it) {
    double change = 0;
    for (int i = 1; i <= n; ++i) {
      const double next = survive * 0.5 * (e[static_cast<std::size_t>(i - 1)] + e[static_cast<std::size_t>(i + 1)]);
      change = std::max(change, std::abs(next - e[static_cast<std::size_t>(i)]));
      e[static_cast<std::size_t>(i)] = next;
    }
    if (change < 1e-16) break;
  }
  return std::vector<double>(e.begin() + 1, e.end() - 1);
}

}  // namespace oracle

#endif  // CATBOX_TESTS_ORACLES_HPP
