#include "sgcov/nnd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgcov {

double void_probability(double r, double d1, const NetworkParams& p) {
  return std::exp(-clipped_ball_measure(r, d1, p));
}

double nnd_pdf(double r, double d1, const NetworkParams& p) {
  if (!(d1 >= 0.0)) throw std::domain_error("nnd_pdf: d1 must be >= 0");
  if (d1 > p.R + r) return 0.0;
  if (d1 <= p.R - r) {
    const double a = p.a(), b = p.b;
    const double d2 = d1 * d1;
    return 2.0 * std::numbers::pi * d1 * p.lambda0 * (a + b * (d2 + r * r)) *
           std::exp(-p.lambda0 * std::numbers::pi * d2 * (a + b * (d2 + 2.0 * r * r) / 2.0));
  }
  return clipped_ball_measure_rate(r, d1, p) * std::exp(-clipped_ball_measure(r, d1, p));
}

NndEvaluation evaluate_nnd(double r, double d1, const NetworkParams& p) {
  return {r, d1, nnd_pdf(r, d1, p), void_probability(r, d1, p)};
}

double nnd_effective_support(double r, const NetworkParams& p, double measure) {
  const double d_max = p.R + r;
  if (clipped_ball_measure(r, d_max, p) < measure) return d_max;
  double lo = 0.0, hi = d_max;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * d_max; ++i) {
    const double mid = 0.5 * (lo + hi);
    (clipped_ball_measure(r, mid, p) >= measure ? hi : lo) = mid;
  }
  return hi;
}

double mean_nnd(double r, const NetworkParams& p, const QuadratureSpec& spec) {
  p.validate();
  const double seam = p.R - r;
  const double top = nnd_effective_support(r, p);
  auto integrand = [&](double d1) { return d1 * nnd_pdf(r, d1, p); };
  if (seam <= 0.0 || seam >= top) return integrate(integrand, 0.0, top, spec).value;
  return integrate(integrand, 0.0, seam, spec).value + integrate(integrand, seam, top, spec).value;
}

}  // namespace sgcov
