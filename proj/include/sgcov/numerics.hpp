#pragma once

// Special functions, adaptive quadrature and numeric differentiation shared by
// the analytic modules.

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace sgcov {

/// Tolerances for every 1-D integral in the library. A result is accepted once
/// the estimated error drops below max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;
  std::size_t max_subdivisions = 200;

  void validate() const;
  /// Same spec with both tolerances multiplied by `factor`.
  QuadratureSpec scaled(double factor) const;
};

/// Central differences with Richardson extrapolation. The step actually used is
/// base_step * max(1, |x|).
struct DiffSpec {
  double base_step = 1e-5;
  int richardson_levels = 2;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
};

/// Thrown when adaptive quadrature runs out of subdivisions; carries the best
/// estimate reached so callers may still inspect it.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

using ScalarFunction = std::function<double(double)>;

/// psi(x, y) = 2F1(1, x; 1 + x; -y) for x > 0, y >= 0.
///
/// Evaluated from x * int_0^1 u^(x-1) / (1 + y u) du after the substitution
/// u = e^v. The finite part of the v-range is covered by fixed Gauss-Legendre
/// panels whose width keeps the complex poles of the integrand well outside
/// the convergence ellipse, and the remaining tail is summed as a rapidly
/// convergent series. Relative accuracy is close to machine precision for all
/// y up to ~1e300. Throws std::domain_error for x <= 0, y < 0 or non-finite
/// input.
double psi(double x, double y);

/// psi(k / eta, y) for k = 2, 3, 4 in one pass; the three share quadrature
/// nodes so the cost is about that of a single psi call.
std::array<double, 3> psi_radial_family(double eta, double y);

/// Adaptive 21-point Gauss-Kronrod quadrature on [a, b] with bisection of the
/// worst interval. Nodes are interior, so integrable endpoint singularities
/// are tolerated. Throws QuadratureError when max_subdivisions is exhausted
/// and std::domain_error when a > b or an endpoint is not finite.
QuadratureResult integrate(const ScalarFunction& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Same as integrate() but never throws on non-convergence.
QuadratureResult integrate_best_effort(const ScalarFunction& f, double a,
                                       double b, const QuadratureSpec& spec = {});

/// First derivative by Richardson-extrapolated central differences.
/// Throws std::domain_error if f returns a non-finite value.
double derivative(const ScalarFunction& f, double x, const DiffSpec& spec = {});

}  // namespace sgcov
