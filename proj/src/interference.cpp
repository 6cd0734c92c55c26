#include "sgcov/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgcov {

namespace {

// phi(x) from the three psi values at x; the cos(theta) term is the only
// bearing dependence.
double phi_from_psi(double x, double cos_theta, double r, const NetworkParams& p,
                    const std::array<double, 3>& psi234) {
  const double a = p.a(), b = p.b;
  return x * x / 6.0 *
         (6.0 * (a + b * r * r) * psi234[0] +
          b * x * (3.0 * x * psi234[2] - 8.0 * r * cos_theta * psi234[1]));
}

double psi_argument(double x, const LaplaceQuery& query) {
  return std::pow(x / query.d1, query.params.eta) / query.q;
}

}  // namespace

void LaplaceQuery::validate() const {
  params.validate();
  if (!(r >= 0.0 && r <= params.R * (1.0 + 1e-12)))
    throw std::domain_error("LaplaceQuery: r outside [0, R]");
  if (!(d1 > 0.0 && d1 <= params.R + r))
    throw std::domain_error("LaplaceQuery: d1 outside (0, R + r]");
  if (!(q > 0.0) || !std::isfinite(q)) throw std::domain_error("LaplaceQuery: q must be > 0");
}

double phi_kernel(double x, double theta, const LaplaceQuery& query) {
  if (!(x >= 0.0)) throw std::domain_error("phi_kernel: x must be >= 0");
  if (x == 0.0) return 0.0;
  const auto psi234 = psi_radial_family(query.params.eta, psi_argument(x, query));
  return phi_from_psi(x, std::cos(theta), query.r, query.params, psi234);
}

QuadratureResult laplace_exponent(const LaplaceQuery& query, const QuadratureSpec& spec) {
  query.validate();
  const NetworkParams& p = query.params;
  const double r = query.r;
  const double d1 = query.d1;
  // At d1 the psi argument is 1/q for every bearing.
  const auto psi_at_d1 = psi_radial_family(p.eta, 1.0 / query.q);

  if (r == 0.0) {
    if (d1 >= p.R) return {};
    // Concentric ball: R_hat = R and the cos(theta) terms integrate to zero
    // over [0, pi].
    const double outer = phi_from_psi(p.R, 0.0, 0.0, p, psi_radial_family(p.eta, psi_argument(p.R, query)));
    const double inner = phi_from_psi(d1, 0.0, 0.0, p, psi_at_d1);
    return {p.lambda0 * std::numbers::pi * (outer - inner), 0.0, 2, 0};
  }

  const double theta1 = intersection_angle(r, d1, p.R);
  if (theta1 <= 0.0) return {};
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double rim = border_distance(r, theta, p.R);
    if (rim <= d1) return 0.0;
    const double outer = phi_from_psi(rim, c, r, p, psi_radial_family(p.eta, psi_argument(rim, query)));
    return outer - phi_from_psi(d1, c, r, p, psi_at_d1);
  };
  QuadratureResult res = integrate(integrand, 0.0, theta1, spec);
  res.value *= p.lambda0;
  res.err_estimate *= p.lambda0;
  return res;
}

double laplace_interference(const LaplaceQuery& query, const QuadratureSpec& spec) {
  const double exponent = laplace_exponent(query, spec).value;
  if (exponent > 745.0) return 0.0;
  return std::min(1.0, std::exp(-exponent));
}

namespace diagnostics {

double laplace_center_closed_form(double d1, double q, const NetworkParams& p) {
  const double R = p.R, b = p.b, eta = p.eta;
  const double Y = std::pow(R / d1, eta) / q;
  const double exponent = 2.0 * d1 * d1 * q * (2.0 + b * d1 * d1 - b * R * R) / (4.0 * (1.0 + q)) -
                          4.0 * R * R * psi(2.0 / eta, Y) + b * R * R * R * R * psi(4.0 / eta, Y);
  return std::exp(exponent);
}

}  // namespace diagnostics

}  // namespace sgcov
