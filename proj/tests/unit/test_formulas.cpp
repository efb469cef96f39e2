#include "doctest.h"

#include "catbox/evaluate.hpp"
#include "catbox/formulas.hpp"
#include "catbox/linear.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace catbox;

TEST_CASE("sweep duration formula") {
  CHECK(e_save(3) == ratio(5, 3));
  CHECK(e_save(5) == ratio(71, 20));
  // the closed form simplifies to n - 3/2 + 1/(n(n-1))
  for (int n : {3, 5, 7, 1001}) CHECK(e_save(n) == Rational(n) - ratio(3, 2) + ratio(1, static_cast<long>(n) * (n - 1)));
  // the formula is derived for odd n and agrees with the exact sweep there
  for (int n : {3, 5}) {
    const auto t = Topology::parse("line:" + std::to_string(n));
    CHECK(e_save(n) == evaluate_strategy(t, sweep_strategy(n)).duration.value());
  }
  // for even n the odd-n derivation does not apply
  CHECK(e_save(4) == ratio(31, 12));
  CHECK(evaluate_strategy(Topology::parse("line:4"), sweep_strategy(4)).duration.value() == ratio(39, 16));
  // the per-step probabilities behind the formula are approximate from n = 7 on
  const auto t7 = Topology::parse("line:7");
  CHECK(e_save(7) == ratio(116, 21));
  CHECK(evaluate_strategy(t7, sweep_strategy(7)).duration.value() == ratio(9897, 1792));
  CHECK_THROWS_AS(e_save(2), std::invalid_argument);
}

TEST_CASE("long sweeps approach n - 1.5") {
  for (const auto& [n, expected] : {std::pair{1000, 998.47}, std::pair{1001, 999.495}}) {
    std::vector<int> boxes;
    for (int b = 2; b <= n - 1; ++b) boxes.push_back(b);
    for (int b = n - 1; b >= 2; --b) boxes.push_back(b);
    const auto totals = oracle::propagate({oracle::Shape::Line, n, false}, oracle::opener(boxes, {}),
                                          static_cast<int>(boxes.size()));
    CHECK(totals.remaining < 1e-15L);
    CHECK(std::abs(static_cast<double>(totals.duration) - expected) < 5e-3);
  }
}

TEST_CASE("random box without feedback") {
  CHECK(e_random_closed(7) == 7);
  CHECK(e_random_closed(1) == 1);
  CHECK(std::abs(e_random_partial_sum(3, 200) - 3.0) < 1e-9);
}

TEST_CASE("exit times without opening") {
  CHECK(e_exit(2, 5) == 8);
  CHECK(e_exit(1, 1) == 1);
  CHECK(e_exit_avg(4) == 5);
  for (int n = 1; n <= 12; ++n) {
    Rational total = 0;
    for (int i = 1; i <= n; ++i) total += e_exit(i, n);
    CHECK(total / n == e_exit_avg(n));
  }
  CHECK_THROWS_AS(e_exit(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(e_exit(4, 3), std::invalid_argument);
}

TEST_CASE("sine profile") {
  CHECK(std::abs(e_sin(11) - 29.35) < 5e-3);
  CHECK(std::abs(sine_survival(11, 20) - 0.50) < 5e-3);
  CHECK(e_sin(2) == doctest::Approx(2.0).epsilon(1e-14));
  for (int n : {2, 3, 11, 40}) {
    const auto p = sine_profile(n);
    double total = 0;
    for (double x : p) total += x;
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::abs(p.front() - p.back()) < 1e-15);
  }
}

TEST_CASE("random opening: exact small cases") {
  const auto r2 = random_open_solve(2);
  CHECK(r2.escape_rate == ratio(1, 3));
  CHECK(r2.duration == ratio(4, 3));
  CHECK(random_open_solve(3).escape_rate == ratio(8, 21));
  CHECK(random_open_solve(3).duration == ratio(13, 7));
  CHECK(random_open_solve(4).escape_rate == ratio(12, 31));
  CHECK(random_open_solve(4).duration == ratio(76, 31));
  CHECK(random_open_solve(5).escape_rate == ratio(124, 325));
  CHECK(random_open_solve(5).duration == ratio(201, 65));
}

TEST_CASE("random opening agrees with value iteration") {
  for (int n : {2, 3, 6, 9, 20, 51, 60}) {
    const auto exact = random_open_solve(n);
    const auto approx = oracle::random_open_escape(n);
    for (int i = 0; i < n; ++i) CHECK(std::abs(to_double(exact.per_box[static_cast<std::size_t>(i)]) - approx[static_cast<std::size_t>(i)]) < 1e-12);
  }
}

TEST_CASE("random opening: caught share identity") {
  for (int n = 2; n <= 50; ++n) {
    const auto r = random_open_solve(n);
    CHECK(r.escape_rate + r.duration / n == 1);
  }
}

TEST_CASE("dense and tridiagonal paths agree at the switch-over") {
  // n = 50 uses the dense path; reproduce it with the tridiagonal solver
  const int n = 50;
  const Rational c = ratio(n - 1, 2L * n);
  RationalVector off(n, -c), diag(n, Rational(1)), rhs(n, Rational(0));
  rhs.front() = c;
  rhs.back() = c;
  CHECK(solve_tridiagonal(off, diag, off, rhs) == random_open_solve(n).per_box);
}

TEST_CASE("random opening estimate") {
  CHECK(std::abs(e_approx(1000) - 995.0) < 1.0);
  CHECK(e_approx(2) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  for (int n = 2; n <= 20; ++n) CHECK(e_approx(n) >= to_double(random_open_solve(n).duration));
}

TEST_CASE("extended Fibonacci and Lucas numbers") {
  CHECK(fib_lucas_ext(SequenceKind::Fibonacci, -2) == -1);
  CHECK(fib_lucas_ext(SequenceKind::Fibonacci, -1) == 1);
  CHECK(fib_lucas_ext(SequenceKind::Lucas, -3) == -4);
  CHECK(fib_lucas_ext(SequenceKind::Lucas, -2) == 3);
  CHECK(fib_lucas_ext(SequenceKind::Lucas, 4) == 7);
  CHECK(fib_lucas_ext(SequenceKind::Fibonacci, 10) == 55);
  for (auto kind : {SequenceKind::Fibonacci, SequenceKind::Lucas}) {
    for (int k = -4; k <= 20; ++k) {
      CHECK(fib_lucas_ext(kind, k + 2) == fib_lucas_ext(kind, k + 1) + fib_lucas_ext(kind, k));
    }
  }
  CHECK(sequence_for(4) == SequenceKind::Fibonacci);
  CHECK(sequence_for(7) == SequenceKind::Lucas);
}

TEST_CASE("grid dwell times") {
  CHECK(e2d(1, 2) == 2);
  CHECK(e2d(1, 3) == ratio(16, 7));
  CHECK(e2d(2, 3) == ratio(20, 7));
  CHECK(e2d(3, 3) == e2d(1, 3));
  CHECK(e2d_avg(3) == ratio(52, 21));
  CHECK(e2d_avg(7) == ratio(1084, 329));
  CHECK(e2d_avg(12) == ratio(836, 233));
  CHECK_THROWS_AS(e2d(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(e2d(4, 3), std::invalid_argument);
}

TEST_CASE("closed forms agree with the absorbing chain") {
  for (int m = 2; m <= 8; ++m) {
    const auto times = oracle::grid_exit_times(m);
    Rational total = 0;
    for (int i = 1; i <= m; ++i) {
      CHECK(e2d(i, m) == times[static_cast<std::size_t>(i - 1)]);
      CHECK(e2d(i, m) == times[static_cast<std::size_t>(m + i - 1)]);
    }
    for (const auto& x : times) total += x;
    CHECK(e2d_avg(m) == total / (2 * m));
  }
}

TEST_CASE("interior recurrence") {
  for (int m = 2; m <= 12; ++m) {
    for (int i = 2; i < m; ++i) CHECK(3 * e2d(i, m) - e2d(i - 1, m) - e2d(i + 1, m) == 4);
  }
}

TEST_CASE("average dwell time grows towards four") {
  Rational previous = 0;
  for (int m = 2; m <= 12; ++m) {
    const auto v = e2d_avg(m);
    CHECK(v > previous);
    CHECK(v < 4);
    previous = v;
  }
}
