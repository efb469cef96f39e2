#ifndef CATBOX_SPECTRAL_HPP
#define CATBOX_SPECTRAL_HPP

#include "catbox/matrix.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace catbox {

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // ||M v - value v||_inf for the returned (normalized) v
  long iterations = 0;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kDefaultIterationCap = 1'000'000;

// Power iteration. The returned vector is scaled to unit sum when all of its
// entries are nonnegative, else to unit infinity norm. A start vector may be
// supplied; when the dominant eigenvalue is repeated, the limit is the
// projection of that start vector onto the dominant eigenspace.
Eigenpair dominant_eigenpair(const NumericMatrix& m, double tol = kDefaultTolerance,
                             std::optional<std::vector<double>> start = std::nullopt,
                             long max_iterations = kDefaultIterationCap);

// Full numeric spectrum, sorted by decreasing modulus.
std::vector<std::complex<double>> eigenvalues(const NumericMatrix& m);

}  // namespace catbox

#endif  // CATBOX_SPECTRAL_HPP
