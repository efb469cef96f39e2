#include "catbox/formulas.hpp"

#include "catbox/linear.hpp"
#include "catbox/matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace catbox {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Rational e_save(int n) {
  require(n >= 3, "e_save needs n >= 3");
  const long m = n;
  return ratio(2 * m * m * m - 5 * m * m + 3 * m + 2, 2 * m * (m - 1));
}

Rational e_random_closed(int n) {
  require(n >= 1, "e_random_closed needs n >= 1");
  return Rational(n);
}

double e_random_partial_sum(int n, int terms) {
  require(n >= 1 && terms >= 0, "bad arguments to e_random_partial_sum");
  const double p = 1.0 / n;
  double total = 0.0;
  double survive = 1.0;
  for (int i = 1; i <= terms; ++i) {
    total += i * p * survive;
    survive *= 1.0 - p;
  }
  return total;
}

long e_exit(int i, int n) {
  require(n >= 1 && i >= 1 && i <= n, "e_exit needs 1 <= i <= n");
  return static_cast<long>(i) * (n - i + 1);
}

Rational e_exit_avg(int n) {
  require(n >= 1, "e_exit_avg needs n >= 1");
  return ratio(static_cast<long>(n + 1) * (n + 2), 6);
}

double e_sin(int n) {
  require(n >= 2, "e_sin needs n >= 2");
  return 1.0 / (1.0 - std::cos(std::numbers::pi / (n + 1)));
}

std::vector<double> sine_profile(int n) {
  require(n >= 2, "sine_profile needs n >= 2");
  const double scale = std::tan(std::numbers::pi / (2.0 * n + 2.0));
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = scale * std::sin(i * std::numbers::pi / (n + 1));
  return p;
}

double sine_survival(int n, int steps) {
  require(n >= 2 && steps >= 0, "bad arguments to sine_survival");
  return std::pow(std::cos(std::numbers::pi / (n + 1)), steps);
}

RandomOpenResult random_open_solve(int n) {
  require(n >= 2, "random_open_solve needs n >= 2");
  const Rational c = ratio(n - 1, 2L * n);
  const auto size = static_cast<std::size_t>(n);
  RationalVector rhs(size, Rational(0));
  rhs.front() += c;  // E(0) = 1
  rhs.back() += c;   // E(n + 1) = 1

  RandomOpenResult out;
  if (n <= 50) {
    RationalMatrix a = RationalMatrix::identity(size);
    for (std::size_t i = 0; i < size; ++i) {
      if (i > 0) a(i, i - 1) = -c;
      if (i + 1 < size) a(i, i + 1) = -c;
    }
    out.per_box = solve_rational_linear(a, rhs);
  } else {
    const RationalVector off(size, -c);
    const RationalVector diag(size, Rational(1));
    out.per_box = solve_tridiagonal(off, diag, off, rhs);
  }
  out.escape_rate = sum(out.per_box) / n;
  out.duration = n * (1 - out.escape_rate);
  return out;
}

double e_approx(int n) {
  require(n >= 2, "e_approx needs n >= 2");
  return 1.0 / (1.0 - (n - 1.0) / n * std::cos(std::numbers::pi / (n + 1)));
}

SequenceKind sequence_for(int m) { return m % 2 == 0 ? SequenceKind::Fibonacci : SequenceKind::Lucas; }

mpz_class fib_lucas_ext(SequenceKind kind, int k) {
  mpz_class a0 = kind == SequenceKind::Fibonacci ? 0 : 2;
  mpz_class a1 = 1;
  if (k >= 0) {
    for (int i = 0; i < k; ++i) {
      mpz_class next = a0 + a1;
      a0 = a1;
      a1 = next;
    }
    return a0;
  }
  // walk backwards: a(j - 1) = a(j + 1) - a(j)
  for (int i = 0; i > k; --i) {
    mpz_class prev = a1 - a0;
    a1 = a0;
    a0 = prev;
  }
  return a0;
}

Rational e2d(int i, int m) {
  require(m >= 2, "e2d needs m >= 2");
  require(i >= 1 && i <= m, "column must lie in 1..m");
  if (2 * i > m + 1) i = m + 1 - i;
  const auto kind = sequence_for(m);
  auto a = [kind](int k) { return fib_lucas_ext(kind, k); };
  const mpz_class num = 4 * (2 * a(m) - 2 * a(m - 2 * i) - a(m - 2) + a(m - 2 - 2 * i));
  Rational r(num, a(m + 1));
  r.canonicalize();
  return r;
}

Rational e2d_avg(int m) {
  require(m >= 2, "e2d_avg needs m >= 2");
  const auto kind = sequence_for(m);
  auto a = [kind](int k) { return Rational(fib_lucas_ext(kind, k)); };
  return 4 / a(m + 1) * (ratio(2L * (m - 1), m) * a(m) - a(m - 2));
}

}  // namespace catbox
