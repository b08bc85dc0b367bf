#include <algorithm>
#include <cmath>
#include <string>

#include "paving/errors.hpp"
#include "paving/linalg.hpp"

namespace paving {
namespace detail {
namespace {

double off_diagonal_sq(std::span<const double> a, std::size_t n) {
  double off = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
  return 2.0 * off;
}

// Cyclic-by-row Jacobi sweeps until the off-diagonal Frobenius mass drops
// below tolerance·‖A‖_F. On return the diagonal holds the eigenvalues.
void jacobi_diagonalize(std::span<double> a, std::size_t n, double tolerance, int max_sweeps) {
  double frob_sq = 0.0;
  for (double x : a) frob_sq += x * x;
  if (frob_sq == 0.0 || n < 2) return;
  const double threshold_sq = tolerance * tolerance * frob_sq;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_sq(a, n) <= threshold_sq) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = nkp;
          a[k * n + q] = a[q * n + k] = nkq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
  }
  if (off_diagonal_sq(a, n) <= threshold_sq) return;
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  throw NumericalError("Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps", std::move(diag));
}

}  // namespace

double jacobi_spectral_radius(std::span<double> a, std::size_t n, double tolerance, int max_sweeps) {
  if (n == 1) return std::abs(a[0]);
  jacobi_diagonalize(a, n, tolerance, max_sweeps);
  double rho = 0.0;
  for (std::size_t i = 0; i < n; ++i) rho = std::max(rho, std::abs(a[i * n + i]));
  return rho;
}

}  // namespace detail

double operator_norm(const SymmetricMatrix& m, const OperatorNormOptions& options) {
  const std::size_t n = m.dim();
  if (n == 0) return 0.0;
  if (n <= options.jacobi_max_dim) {
    std::vector<double> scratch(m.entries().begin(), m.entries().end());
    return detail::jacobi_spectral_radius(scratch, n, options.jacobi_tolerance, options.jacobi_max_sweeps);
  }
  return power_operator_norm(m, options.power_tolerance, options.power_max_iterations);
}

std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m, const OperatorNormOptions& options) {
  const std::size_t n = m.dim();
  std::vector<double> scratch(m.entries().begin(), m.entries().end());
  detail::jacobi_diagonalize(scratch, n, options.jacobi_tolerance, options.jacobi_max_sweeps);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = scratch[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

double power_operator_norm(const SymmetricMatrix& m, double tolerance, std::size_t max_iterations) {
  const std::size_t n = m.dim();
  if (n == 0 || m.max_abs() == 0.0) return 0.0;

  auto multiply = [&](const std::vector<double>& x) {
    std::vector<double> y(n, 0.0);
    const auto e = m.entries();
    for (std::size_t i = 0; i < n; ++i) y[i] = dot(e.subspan(i * n, n), x);
    return y;
  };
  auto normalize = [](std::vector<double>& x) {
    const double len = std::sqrt(dot(x, x));
    if (len == 0.0) return 0.0;
    for (double& v : x) v /= len;
    return len;
  };

  // Fixed, non-symmetric start so it is unlikely to be orthogonal to the
  // dominant eigenspace.
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + std::sin(static_cast<double>(i) + 0.5);
  normalize(x);

  double previous = 0.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::vector<double> mx = multiply(x);
    // Rayleigh quotient of M² at unit x is ‖Mx‖².
    const double rayleigh = dot(mx, mx);
    std::vector<double> y = multiply(mx);
    if (normalize(y) == 0.0) return 0.0;
    x = std::move(y);
    if (it > 0 && std::abs(rayleigh - previous) <= tolerance * rayleigh) return std::sqrt(rayleigh);
    previous = rayleigh;
  }
  throw NumericalError("power iteration did not converge in " + std::to_string(max_iterations) + " iterations",
                       std::move(x));
}

}  // namespace paving
