#pragma once

// Laplace functional of the aggregate interference at a mobile user whose
// serving access point is at distance d1, under Rayleigh fading.

#include "sgcov/geometry.hpp"
#include "sgcov/numerics.hpp"

namespace sgcov {

struct LaplaceQuery {
  double r = 0.0;
  double d1 = 1.0;
  double q = 1.0;
  NetworkParams params;

  void validate() const;
};

/// Radial kernel phi(x) at bearing theta: twice the interference intensity
/// integrated along the ray from the MU out to distance x, divided by lambda0,
///   (x^2 / 6) [6 (a + b r^2) psi(2/eta, y) + b x (3 x psi(4/eta, y) - 8 r cos(theta) psi(3/eta, y))]
/// with y = x^eta / (q d1^eta).
double phi_kernel(double x, double theta, const LaplaceQuery& query);

/// lambda0 * int_0^theta1 [phi(R_hat(theta)) - phi(d1)] dtheta, the exponent of
/// the Laplace functional. theta1 = intersection_angle(r, d1, R); bearings
/// beyond theta1 see the border before d1 and contribute nothing.
QuadratureResult laplace_exponent(const LaplaceQuery& query,
                                  const QuadratureSpec& spec = {1e-12, 1e-10, 200});

/// exp(-laplace_exponent). Returns 0 when the exponent exceeds 745.
double laplace_interference(const LaplaceQuery& query,
                            const QuadratureSpec& spec = {1e-12, 1e-10, 200});

namespace diagnostics {

/// Closed form for the MU at the centre in its original transcription:
///   exp[2 d1^2 q (2 + b d1^2 - b R^2) / (4 (1 + q)) - 4 R^2 psi(2/eta, Y) + b R^4 psi(4/eta, Y)]
/// with Y = R^eta / (q d1^eta). It does not agree with laplace_interference at
/// r = 0 (no lambda0 factor, wrong sign of the first term) and is only used
/// for the discrepancy report; never in the coverage pipeline.
double laplace_center_closed_form(double d1, double q, const NetworkParams& p);

}  // namespace diagnostics

}  // namespace sgcov
