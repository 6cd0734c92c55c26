#pragma once

// Distribution of the distance d1 from a mobile user at radius r to its
// nearest access point.

#include "sgcov/geometry.hpp"
#include "sgcov/numerics.hpp"

namespace sgcov {

struct NndEvaluation {
  double r = 0.0;
  double d1 = 0.0;
  double pdf_value = 0.0;
  double void_prob = 1.0;
};

/// P[no access point within distance d1] = exp(-clipped_ball_measure).
double void_probability(double r, double d1, const NetworkParams& p);

/// Density of d1. On the interior branch d1 <= R - r this is
/// 2 pi d1 lambda0 (a + b (d1^2 + r^2)) exp(-lambda0 pi d1^2 (a + b (d1^2 + 2 r^2) / 2));
/// beyond it the ball is clipped by the border and the density is
/// Lambda'(d1) exp(-Lambda(d1)). Zero for d1 > R + r. Not renormalised: it
/// integrates to 1 - exp(-lambda0 pi R^2), the deficit being the empty network.
double nnd_pdf(double r, double d1, const NetworkParams& p);

NndEvaluation evaluate_nnd(double r, double d1, const NetworkParams& p);

/// Unconditional mean int_0^{R+r} d1 f(r, d1) dd1.
double mean_nnd(double r, const NetworkParams& p, const QuadratureSpec& spec = {});

/// Smallest d1 in [0, R + r] with clipped_ball_measure >= `measure`; returns
/// R + r when the total mass is below `measure`. Used to drop the part of the
/// d1 range whose probability is negligible.
double nnd_effective_support(double r, const NetworkParams& p, double measure = 45.0);

}  // namespace sgcov
