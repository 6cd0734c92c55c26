#pragma once

// Deployment region, intensity profiles and the disk/ball geometry shared by
// the nearest-neighbour and interference computations.
//
// Conventions: the deployment region is the disk of radius R centred at the
// origin. A mobile user (MU) sits at radius r. Bearings theta seen from the MU
// are measured from the direction pointing at the centre, so a point at
// distance d and bearing theta lies at radius sqrt(r^2 + d^2 - 2 r d cos theta).

#include <numbers>

namespace sgcov {

/// Network parameters. `b` shapes the access point intensity
/// lambda(t) = lambda0 (a + b t^2) with a = 1 - b R^2 / 2 always derived.
struct NetworkParams {
  double R = 5.0;
  double lambda0 = 1.0;
  double b = 0.0;
  double eta = 4.0;
  double power = 1.0;
  double noise = 1.0;
  double q = 1.0;

  double a() const noexcept { return 1.0 - b * R * R / 2.0; }
  /// Expected number of access points in the disk, lambda0 * pi * R^2.
  double mean_count() const noexcept { return lambda0 * std::numbers::pi * R * R; }
  double b_max() const noexcept { return 2.0 / (R * R); }

  /// Throws std::domain_error when an invariant is violated.
  void validate() const;
  NetworkParams with_b(double new_b) const {
    NetworkParams p = *this;
    p.b = new_b;
    return p;
  }
};

/// Mobile user density shape: rho(r) = 1 - beta R^2 / 2 + beta r^2.
struct MuProfile {
  double beta = 0.0;

  void validate(double R) const;
};

/// A point of the disk in polar coordinates.
struct PolarPoint {
  double t = 0.0;
  double phi = 0.0;
};

enum class Preset { uniform, concave, convex };

/// b for the named deployment: 0, -2/R^2 or 2/R^2.
double preset_b(Preset preset, double R);

double ap_intensity(double t, const NetworkParams& p);

double mu_density(double r, const MuProfile& mu, double R);

/// Expected number of access points inside B(r, d1) intersected with the disk.
double clipped_ball_measure(double r, double d1, const NetworkParams& p);

/// d/dd1 of clipped_ball_measure: the intensity integrated along the part of
/// the circle |x - r| = d1 that lies in the disk. Continuous in d1.
double clipped_ball_measure_rate(double r, double d1, const NetworkParams& p);

/// Bearing range [0, theta1] over which the disk border lies beyond d1:
/// min(arccos((r^2 + d1^2 - R^2) / (2 r d1)), pi), argument clamped to [-1, 1].
/// Returns pi for r = 0.
double intersection_angle(double r, double d1, double R);

/// Distance from the MU to the border along bearing theta,
/// r cos(theta) + sqrt(R^2 - r^2 sin^2(theta)).
double border_distance(double r, double theta, double R);

namespace diagnostics {

/// Long-form closed expression for the clipped-ball measure in its original
/// transcription: 2 lambda0 times a bracketed expression, valid for
/// R - r < d1 < R + r and r > 0. As transcribed it disagrees with direct
/// integration. With `corrected` set, three
/// transcription slips are repaired (prefactor lambda0 instead of 2 lambda0,
/// pi/2 - atan instead of pi/2 + atan in the disk-cap angle, r^3 instead of
/// r^2 in the last polynomial) and the result matches clipped_ball_measure().
double clipped_ball_measure_printed(double r, double d1, const NetworkParams& p,
                                    bool corrected = false);

}  // namespace diagnostics

}  // namespace sgcov
