#pragma once

// Simulation oracle: draws access point deployments from the non-uniform
// Poisson process, applies Rayleigh fading and pathloss, and estimates the
// nearest-neighbour law, the interference Laplace functional and coverage.
//
// Every trial owns an RNG stream derived from (master_seed, trial index), and
// per-trial results are reduced in trial order, so estimates are bitwise
// reproducible whatever the number of worker threads.

#include <cstddef>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "sgcov/geometry.hpp"

namespace sgcov {

using Rng = std::mt19937_64;

/// Independent stream for one trial.
Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial_index);

struct FixedMu {
  double r = 0.0;
  double theta = 0.0;
};
/// MU radius drawn from rho(r) of SimConfig::mu_profile, bearing uniform.
struct SampledMu {};

struct SimConfig {
  std::size_t trials = 10000;
  std::uint64_t master_seed = 0;
  std::variant<FixedMu, SampledMu> mu_position = FixedMu{};
  NetworkParams params;
  MuProfile mu_profile;
  unsigned workers = 1;

  void validate() const;
};

struct SimEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials_used = 0;
};

/// Radial law of the deployment: fraction of points within radius t,
/// (2 a t^2 + b t^4) / (2 R^2) with a = 1 - b R^2 / 2.
double radial_cdf(double t, double b, double R);

/// Inverse of radial_cdf, t^2 = 2 R^2 u / (a + sqrt(a^2 + 2 b R^2 u)).
double radial_inverse_cdf(double u, double b, double R);

/// Poisson count with mean lambda0 pi R^2, radii by inverse CDF, uniform angles.
std::vector<PolarPoint> sample_deployment(const NetworkParams& params, Rng& rng);
void sample_deployment(const NetworkParams& params, Rng& rng, std::vector<PolarPoint>& out);

/// Same law obtained by thinning a uniform process of the peak intensity,
/// keeping a point at radius t with probability lambda(t) / max lambda.
std::vector<PolarPoint> sample_deployment_by_thinning(const NetworkParams& params, Rng& rng);

/// Fraction of trials with SINR >= q at the MU. Empty deployments count as
/// outage.
SimEstimate simulate_coverage(const SimConfig& cfg);

struct NndSimulation {
  std::vector<double> samples;  // d1 of every non-empty trial, in trial order
  std::size_t empty_deployments = 0;
  SimEstimate mean_d1;
  double bin_width = 0.0;
  std::vector<std::size_t> histogram;  // bin k covers [k w, (k + 1) w)

  /// Histogram normalised by the total number of trials, so that it
  /// estimates the unnormalised density nnd_pdf.
  std::vector<double> density() const;
};

/// Requires a fixed MU position.
NndSimulation simulate_nnd(const SimConfig& cfg, double bin_width = 0.05);

/// How deployments are conditioned on having no point inside B(MU, d1).
enum class BallConditioning {
  discard,  // drop the points inside the ball (independence of disjoint regions)
  reject,   // redraw until the ball is empty
};

/// Estimates E[exp(-q d1^eta sum_k |h_k|^2 d_k^-eta)] over interferers outside
/// B(MU, d1). Requires a fixed MU position. Rejection gives up with
/// std::runtime_error after 10^6 redraws in one trial.
SimEstimate simulate_laplace(const SimConfig& cfg, double d1,
                             BallConditioning conditioning = BallConditioning::discard);

}  // namespace sgcov
