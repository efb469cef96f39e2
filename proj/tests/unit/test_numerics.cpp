#include "doctest.h"

#include "catbox/linear.hpp"
#include "catbox/rational.hpp"
#include "catbox/spectral.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace catbox;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("39/16") == ratio(39, 16));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("6/4") == ratio(3, 2));
  CHECK(to_string(ratio(608, 141)) == "608/141");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(ratio(39, 16)) == "2.43750");
  CHECK(to_decimal(ratio(608, 141)) == "4.31206");
  CHECK(to_decimal(ratio(1, 3), 3) == "0.333");
  CHECK(to_decimal(ratio(5, 2), 0) == "3");
  CHECK(to_decimal(ratio(-5, 2), 0) == "-3");
  CHECK(to_decimal(ratio(1, 200000), 5) == "0.00001");
  CHECK(to_decimal(ratio(-1, 300000), 5) == "0.00000");
}

TEST_CASE("exact solve matches an independent Gauss-Jordan") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    RationalMatrix a(n, n);
    RationalVector b(n);
    std::vector<std::vector<mpq_class>> oa(n, std::vector<mpq_class>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = ratio(coeff(rng), 1 + (trial + static_cast<int>(r + c)) % 5);
        oa[r][c] = a(r, c);
      }
      a(r, r) += 20;  // diagonally dominant, so never singular
      oa[r][r] = a(r, r);
      b[r] = ratio(coeff(rng), 3);
    }
    const auto x = solve_rational_linear(a, b);
    CHECK(x == oracle::gauss_jordan(oa, b));
    CHECK(a * x == b);
  }
}

TEST_CASE("singular and mismatched systems are rejected") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK_THROWS_AS(solve_rational_linear(a, {1, 1}), SingularMatrix);
  CHECK_THROWS_AS(solve_rational_linear(a, {1, 1, 1}), DimensionMismatch);
  CHECK(determinant(a) == 0);
  a(1, 1) = 5;
  CHECK(determinant(a) == 1);
}

TEST_CASE("tridiagonal solve agrees with the dense solve") {
  const std::size_t n = 9;
  RationalVector lower(n, ratio(-1, 2)), diag(n, Rational(2)), upper(n, ratio(-1, 3)), rhs(n);
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = ratio(static_cast<long>(i) + 1, 7);
    a(i, i) = diag[i];
    if (i > 0) a(i, i - 1) = lower[i];
    if (i + 1 < n) a(i, i + 1) = upper[i];
  }
  CHECK(solve_tridiagonal(lower, diag, upper, rhs) == solve_rational_linear(a, rhs));
}

TEST_CASE("numeric solve") {
  NumericMatrix a(2, 2);
  a(0, 0) = 0.0;
  a(0, 1) = 1.0;
  a(1, 0) = 2.0;
  a(1, 1) = 1.0;
  const auto x = solve_numeric(a, {1.0, 4.0});
  CHECK(x[0] == doctest::Approx(1.5));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("power iteration finds the dominant pair") {
  NumericMatrix m(2, 2);
  m(0, 0) = 0.5;
  m(0, 1) = 0.25;
  m(1, 0) = 0.25;
  m(1, 1) = 0.5;
  const auto pair = dominant_eigenpair(m);
  CHECK(pair.value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(pair.vector[0] == doctest::Approx(0.5));
  CHECK(pair.residual < 1e-12);

  const auto values = eigenvalues(m);
  REQUIRE(values.size() == 2);
  CHECK(std::abs(values[0]) == doctest::Approx(0.75));
  CHECK(std::abs(values[1]) == doctest::Approx(0.25));
}

TEST_CASE("nilpotent matrix reports eigenvalue zero") {
  NumericMatrix m(2, 2);
  m(1, 0) = 1.0;
  const auto pair = dominant_eigenpair(m);
  CHECK(pair.value == 0.0);
}
