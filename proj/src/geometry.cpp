#include "sgcov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sgcov {

namespace {

constexpr double kPi = std::numbers::pi;

// Relative slack on the b and beta range checks so that values such as
// -2.0 / 25.0 computed in a different order are not rejected.
constexpr double kRangeSlack = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

void check_radius(double r, double R, const char* what) {
  require(std::isfinite(r) && r >= 0.0 && r <= R * (1.0 + 1e-12), what);
}

// Integral of (a + b |x|^2) over the circular segment {u >= e} of a circle of
// radius rho centred at (x0, 0), u being the coordinate along the x axis
// relative to the centre. The caller supplies rho - e and rho + e in factored
// form; near tangency they are tiny and the direct differences lose digits.
double segment_integral(double x0, double rho, double rho_minus_e, double rho_plus_e, double a,
                        double b) {
  rho_minus_e = std::clamp(rho_minus_e, 0.0, 2.0 * rho);
  rho_plus_e = std::clamp(rho_plus_e, 0.0, 2.0 * rho);
  const double e = 0.5 * (rho_plus_e - rho_minus_e);
  const double g = std::sqrt(rho_minus_e * rho_plus_e);
  const double alpha = std::atan2(g, e);
  const double m0 = rho * rho * alpha - e * g;
  const double m1 = 2.0 / 3.0 * g * g * g;
  const double m2 = 0.5 * rho * rho * rho * rho * alpha - e * g * (2.0 * e * e + rho * rho) / 6.0;
  return (a + b * x0 * x0) * m0 + 2.0 * b * x0 * m1 + b * m2;
}

}  // namespace

void NetworkParams::validate() const {
  require(std::isfinite(R) && R > 0.0, "NetworkParams: R must be > 0");
  require(std::isfinite(lambda0) && lambda0 > 0.0, "NetworkParams: lambda0 must be > 0");
  require(std::isfinite(eta) && eta >= 2.0, "NetworkParams: eta must be >= 2");
  require(std::isfinite(power) && power > 0.0, "NetworkParams: power must be > 0");
  require(std::isfinite(noise) && noise >= 0.0, "NetworkParams: noise must be >= 0");
  require(std::isfinite(q) && q > 0.0, "NetworkParams: q must be > 0");
  require(std::isfinite(b) && std::abs(b) <= b_max() * (1.0 + kRangeSlack),
          "NetworkParams: b must lie in [-2/R^2, 2/R^2]");
}

void MuProfile::validate(double R) const {
  require(std::isfinite(beta) && std::abs(beta) <= 2.0 / (R * R) * (1.0 + kRangeSlack),
          "MuProfile: beta must lie in [-2/R^2, 2/R^2]");
}

double preset_b(Preset preset, double R) {
  switch (preset) {
    case Preset::uniform: return 0.0;
    case Preset::concave: return -2.0 / (R * R);
    case Preset::convex: return 2.0 / (R * R);
  }
  return 0.0;
}

double ap_intensity(double t, const NetworkParams& p) {
  check_radius(t, p.R, "ap_intensity: t outside [0, R]");
  return std::max(0.0, p.lambda0 * (p.a() + p.b * t * t));
}

double mu_density(double r, const MuProfile& mu, double R) {
  check_radius(r, R, "mu_density: r outside [0, R]");
  return std::max(0.0, 1.0 - mu.beta * R * R / 2.0 + mu.beta * r * r);
}

double intersection_angle(double r, double d1, double R) {
  require(d1 > 0.0 && r >= 0.0, "intersection_angle: requires r >= 0 and d1 > 0");
  if (r == 0.0) return d1 <= R ? kPi : 0.0;
  // Factored 1 - cos and 1 + cos keep full accuracy near the seam and the far tangency.
  const double one_minus = std::max(0.0, (R - r + d1) * (R + r - d1));
  const double one_plus = std::max(0.0, (r + d1 - R) * (r + d1 + R));
  return 2.0 * std::atan2(std::sqrt(one_minus), std::sqrt(one_plus));
}

double border_distance(double r, double theta, double R) {
  const double s = r * std::sin(theta);
  return r * std::cos(theta) + std::sqrt(std::max(0.0, R * R - s * s));
}

double clipped_ball_measure(double r, double d1, const NetworkParams& p) {
  check_radius(r, p.R, "clipped_ball_measure: r outside [0, R]");
  require(std::isfinite(d1) && d1 >= 0.0, "clipped_ball_measure: d1 must be >= 0");
  const double R = p.R, a = p.a(), b = p.b;
  if (d1 >= R + r) return p.mean_count();
  if (d1 <= R - r) return p.lambda0 * kPi * d1 * d1 * (a + b * (d1 * d1 + 2.0 * r * r) / 2.0);

  // Ball and disk circles cross on the chord x = r_hat = (R^2 + r^2 - d1^2) / (2 r).
  // The clipped ball is the ball segment on the centre side of the chord plus
  // the disk segment beyond it. The ball segment is evaluated in mirrored
  // coordinates x -> -x, where it is the cap {u >= r - r_hat} of a circle of
  // radius d1 centred at -r.
  const double two_r = 2.0 * r;
  const double ball_part = segment_integral(-r, d1, (R - d1 + r) * (R + d1 - r) / two_r,
                                            (d1 + r - R) * (d1 + r + R) / two_r, a, b);
  const double disk_part = segment_integral(0.0, R, (d1 - R + r) * (d1 + R - r) / two_r,
                                            (R + r - d1) * (R + r + d1) / two_r, a, b);
  return p.lambda0 * (ball_part + disk_part);
}

double clipped_ball_measure_rate(double r, double d1, const NetworkParams& p) {
  check_radius(r, p.R, "clipped_ball_measure_rate: r outside [0, R]");
  require(std::isfinite(d1) && d1 >= 0.0, "clipped_ball_measure_rate: d1 must be >= 0");
  if (d1 == 0.0 || d1 >= p.R + r) return 0.0;
  const double theta1 = intersection_angle(r, d1, p.R);
  const double a = p.a(), b = p.b;
  const double rate = 2.0 * d1 * p.lambda0 *
                      ((a + b * (r * r + d1 * d1)) * theta1 - 2.0 * b * r * d1 * std::sin(theta1));
  return std::max(0.0, rate);
}

namespace diagnostics {

double clipped_ball_measure_printed(double r, double d1, const NetworkParams& p,
                                    bool corrected) {
  const double R = p.R, a = p.a(), b = p.b;
  const double r_hat = (R * R + r * r - d1 * d1) / (2.0 * r);
  const double rt = r_hat - r;
  const double h = std::sqrt(d1 * d1 - rt * rt);
  const double hR = std::sqrt(R * R - r_hat * r_hat);
  const double d2 = d1 * d1;
  const double bracket =
      a * rt * h +
      d2 * (std::atan(rt / h) + kPi / 2.0) * (a + b * (d2 + 2.0 * r * r) / 2.0) +
      b * rt / (12.0 * h) * (5.0 * d2 * d2 - 7.0 * d2 * rt * rt + 2.0 * rt * rt * rt * rt) -
      b * h / 12.0 *
          (d2 * (13.0 * r + 3.0 * r_hat) +
           2.0 * ((corrected ? r * r * r : r * r) + r * r * r_hat + r * r_hat * r_hat - 3.0 * r_hat * r_hat * r_hat)) +
      R * R * (a + b * R * R / 2.0) * (kPi / 2.0 + (corrected ? -1.0 : 1.0) * std::atan(r_hat / hR)) -
      r_hat * hR * (a + b / 6.0 * (R * R + 2.0 * r_hat * r_hat));
  return (corrected ? 1.0 : 2.0) * p.lambda0 * bracket;
}

}  // namespace diagnostics

}  // namespace sgcov
