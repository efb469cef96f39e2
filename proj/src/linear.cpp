#include "catbox/linear.hpp"

#include <cmath>
#include <utility>

namespace catbox {

namespace {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Rows of the augmented matrix, each multiplied by the lcm of its denominators.
IntegerMatrix integer_rows(const RationalMatrix& a, const RationalVector* b) {
  const std::size_t n = a.rows();
  const std::size_t width = a.cols() + (b ? 1 : 0);
  IntegerMatrix rows(n, std::vector<mpz_class>(width));
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    if (b) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*b)[r].get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      rows[r][c] = a(r, c).get_num() * (scale / a(r, c).get_den());
    }
    if (b) rows[r][a.cols()] = (*b)[r].get_num() * (scale / (*b)[r].get_den());
  }
  return rows;
}

// In-place Bareiss elimination over the first n columns. Returns false on a
// zero pivot column. Tracks the sign flips of row swaps.
bool bareiss(IntegerMatrix& m, std::size_t n, int& sign) {
  const std::size_t width = m.empty() ? 0 : m[0].size();
  mpz_class previous = 1;
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return true;
}

}  // namespace

RationalVector solve_rational_linear(const RationalMatrix& a, const RationalVector& b) {
  if (!a.square()) throw DimensionMismatch("coefficient matrix is not square");
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match matrix");
  const std::size_t n = a.rows();

  IntegerMatrix m = integer_rows(a, &b);
  int sign = 1;
  if (!bareiss(m, n, sign)) throw SingularMatrix("matrix is singular");

  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  IntegerMatrix m = integer_rows(a, nullptr);
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    scale *= Rational(lcm);
  }
  int sign = 1;
  if (!bareiss(m, n, sign)) return 0;
  Rational det(m[n - 1][n - 1]);
  det /= scale;
  return sign < 0 ? Rational(-det) : det;
}

RationalVector solve_tridiagonal(const RationalVector& lower, const RationalVector& diag,
                                 const RationalVector& upper, const RationalVector& rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw DimensionMismatch("tridiagonal bands must all have the system size");
  }
  RationalVector c(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational denom = diag[i];
    if (i > 0) denom -= lower[i] * c[i - 1];
    if (denom == 0) throw SingularMatrix("zero pivot in tridiagonal elimination");
    c[i] = upper[i] / denom;
    d[i] = rhs[i];
    if (i > 0) d[i] -= lower[i] * d[i - 1];
    d[i] /= denom;
  }
  RationalVector x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

std::vector<double> solve_numeric(NumericMatrix a, std::vector<double> b) {
  if (!a.square()) throw DimensionMismatch("coefficient matrix is not square");
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match matrix");
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    }
    if (a(pivot, k) == 0.0) throw SingularMatrix("matrix is numerically singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      std::swap(b[k], b[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace catbox
