#ifndef CATBOX_LINEAR_HPP
#define CATBOX_LINEAR_HPP

#include "catbox/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace catbox {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * Exact solve of A x = b.
 *
 * Every row of [A | b] is first scaled to integers, then eliminated with
 * Bareiss' fraction-free scheme: all intermediate entries stay integral and
 * each division is exact. Only the final back substitution produces
 * rationals. A zero pivot column means A is singular.
 */
RationalVector solve_rational_linear(const RationalMatrix& a, const RationalVector& b);

// Exact determinant via the same fraction-free elimination.
Rational determinant(const RationalMatrix& a);

// Exact solve of a tridiagonal system; lower[0] and upper[n-1] are ignored.
RationalVector solve_tridiagonal(const RationalVector& lower, const RationalVector& diag,
                                 const RationalVector& upper, const RationalVector& rhs);

// Gaussian elimination with partial pivoting in doubles.
std::vector<double> solve_numeric(NumericMatrix a, std::vector<double> b);

}  // namespace catbox

#endif  // CATBOX_LINEAR_HPP
