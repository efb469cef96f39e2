#ifndef CATBOX_FORMULAS_HPP
#define CATBOX_FORMULAS_HPP

#include "catbox/rational.hpp"

#include <vector>

namespace catbox {

// Expected duration of the sweep 2..n-1, n-1..2 on a line without exits,
// derived from per-step catch probabilities that are only approximate for
// n >= 6; compare with evaluate_strategy(sweep_strategy(n)).
Rational e_save(int n);

// Opening a uniformly random box each step on a line without exits takes n
// steps on average.
Rational e_random_closed(int n);

// sum_{i <= terms} i (1/n) (1 - 1/n)^(i-1), which tends to n.
double e_random_partial_sum(int n, int terms);

// Expected steps until a cat starting in box i walks out of line:n:exits
// when no box is ever opened: i (n - i + 1).
long e_exit(int i, int n);
// Average of e_exit over the starting box: (n + 1)(n + 2) / 6.
Rational e_exit_avg(int n);

// Expected escape time when the in-box distribution is the sine profile,
// which keeps its shape and shrinks by cos(pi / (n + 1)) every move.
double e_sin(int n);
// tan(pi / (2n + 2)) sin(i pi / (n + 1)) for i = 1..n; sums to one.
std::vector<double> sine_profile(int n);
// Fraction of a sine-profile population still inside after `steps` moves.
double sine_survival(int n, int steps);

struct RandomOpenResult {
  Rational escape_rate;
  Rational duration;
  RationalVector per_box;  // escape probability by starting box
};

// Every step a uniformly random box of line:n:exits is opened. The escape
// probability E(i) from box i satisfies
//   E(i) = (n - 1)/n * (E(i - 1) + E(i + 1)) / 2,  E(0) = E(n + 1) = 1,
// the escape rate is the mean of E and the duration is n (1 - escape).
// Up to n = 50 the full dense system is solved; larger n use the exact
// tridiagonal solver.
RandomOpenResult random_open_solve(int n);

// 1 / (1 - (n-1)/n cos(pi / (n + 1))): treats the random opening as a uniform
// extra catch on top of the sine decay; overestimates the true duration.
double e_approx(int n);

enum class SequenceKind { Fibonacci, Lucas };

// Fibonacci for even m, Lucas for odd m.
SequenceKind sequence_for(int m);

// Fibonacci (0, 1, 1, 2, ...) or Lucas (2, 1, 3, 4, ...) at index k, extended
// to negative k by a(k - 2) = a(k) - a(k - 1).
mpz_class fib_lucas_ext(SequenceKind kind, int k);

// Expected number of moves until a random walker starting in column i of
// grid:2xm:exits leaves, from the closed form
//   4 (2 a_m - 2 a_{m-2i} - a_{m-2} + a_{m-2-2i}) / a_{m+1}.
// Columns past the middle use the mirror column m + 1 - i.
Rational e2d(int i, int m);
// Average over all 2m starting boxes: 4/a_{m+1} (2 (m-1)/m a_m - a_{m-2}).
Rational e2d_avg(int m);

}  // namespace catbox

#endif  // CATBOX_FORMULAS_HPP
