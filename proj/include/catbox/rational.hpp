#ifndef CATBOX_RATIONAL_HPP
#define CATBOX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace catbox {

// Exact probabilities, durations and escape rates. Always kept canonical
// (denominator > 0, gcd(num, den) = 1).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p/q" or an integer "p" (optional leading sign).
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Fixed-point rendering, rounded half away from zero, computed exactly.
std::string to_decimal(const Rational& value, int places = 5);

// num/den in canonical form; mpq_class(num, den) alone does not reduce.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

Rational sum(const RationalVector& values);

}  // namespace catbox

#endif  // CATBOX_RATIONAL_HPP
