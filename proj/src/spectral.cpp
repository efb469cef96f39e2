#include "catbox/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace catbox {

namespace {

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void normalize(std::vector<double>& v) {
  const bool nonnegative = std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (nonnegative && total > 0.0) {
    for (double& x : v) x /= total;
    return;
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  }
  const double scale = v[arg];
  if (scale == 0.0) return;
  for (double& x : v) x /= scale;
}

}  // namespace

Eigenpair dominant_eigenpair(const NumericMatrix& m, double tol, std::optional<std::vector<double>> start,
                             long max_iterations) {
  if (!m.square()) throw std::invalid_argument("power iteration needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<double> v = start.value_or(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  if (v.size() != n) throw std::invalid_argument("start vector has the wrong length");
  normalize(v);
  if (inf_norm(v) == 0.0) throw std::invalid_argument("start vector is zero");

  Eigenpair out;
  for (long it = 1; it <= max_iterations; ++it) {
    std::vector<double> w = m * v;
    // Rayleigh-style estimate anchored on the largest component of v
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    }
    const double lambda = w[arg] / v[arg];
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - lambda * v[i]));

    if (inf_norm(w) == 0.0) {
      // nilpotent along v: eigenvalue zero, v itself is the last nonzero iterate
      out.value = 0.0;
      out.vector = v;
      out.residual = residual;
      out.iterations = it;
      return out;
    }
    normalize(w);
    v = std::move(w);
    if (residual < tol) {
      std::vector<double> mv = m * v;
      double final_residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) final_residual = std::max(final_residual, std::abs(mv[i] - lambda * v[i]));
      out.value = lambda;
      out.vector = v;
      out.residual = final_residual;
      out.iterations = it;
      return out;
    }
  }
  throw NonConvergence("power iteration did not converge within the iteration cap");
}

std::vector<std::complex<double>> eigenvalues(const NumericMatrix& m) {
  if (!m.square()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd dense(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      dense(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, false);
  if (solver.info() != Eigen::Success) throw NonConvergence("eigenvalue solver failed");
  std::vector<std::complex<double>> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(values.begin(), values.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  return values;
}

}  // namespace catbox
