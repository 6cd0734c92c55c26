#pragma once

// Connection probability, position-dependent coverage, MU-weighted average
// coverage and the search for the coverage-maximising deployment shape b.

#include <functional>
#include <map>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "sgcov/geometry.hpp"
#include "sgcov/numerics.hpp"

namespace sgcov {

struct CoverageResult {
  double value = 0.0;
  double err_estimate = 0.0;
};

/// P[SINR >= q | serving AP at distance d1]
///   = exp(-q N d1^eta / P) * laplace_interference(r, d1, q).
double connection_probability(double r, double d1, const NetworkParams& p,
                              const QuadratureSpec& spec = {1e-12, 1e-10, 200});

/// C(r) = int_0^{R+r} H(r, d1) f(r, d1) dd1. The d1 range is split at the
/// border seam d1 = R - r and cut where the void probability drops below
/// e^-45. `spec` governs the d1 integral; the bearing integral inside the
/// Laplace functional runs two decades tighter.
CoverageResult coverage_probability(double r, const NetworkParams& p,
                                    const QuadratureSpec& spec = {});

/// int_0^R C(r) r dr and int_0^R C(r) r^3 dr for a fixed deployment. Since
/// rho(r) r is a combination of r and r^3, these two moments determine the
/// average coverage for every MU profile.
struct CoverageMoments {
  double m1 = 0.0;
  double m3 = 0.0;
  double err_estimate = 0.0;

  CoverageResult average(const MuProfile& mu, double R) const;
};

CoverageMoments coverage_moments(const NetworkParams& p, const QuadratureSpec& spec = {});

/// Cbar = (2 / R^2) int_0^R rho(r) C(r) r dr.
CoverageResult average_coverage(const NetworkParams& p, const MuProfile& mu,
                                const QuadratureSpec& spec = {});

/// Caches coverage moments per (b, tolerance) for one parameter set, so that
/// sweeps over b and over MU profiles share the expensive inner integrals.
/// Safe for concurrent use.
class AverageCoverageEvaluator {
 public:
  explicit AverageCoverageEvaluator(NetworkParams base);

  const NetworkParams& base() const noexcept { return base_; }
  CoverageMoments moments(double b, const QuadratureSpec& spec);
  CoverageResult average(double b, const MuProfile& mu, const QuadratureSpec& spec) {
    return moments(b, spec).average(mu, base_.R);
  }
  std::size_t cached() const;

 private:
  using Key = std::pair<double, double>;  // (b, rel_tol)
  NetworkParams base_;
  mutable std::mutex mutex_;
  std::map<Key, CoverageMoments> cache_;
};

struct OptimizationResult {
  double b_star = 0.0;
  double cbar_at_b_star = 0.0;
  std::vector<std::pair<double, double>> scan;  // (b, Cbar) on the coarse grid
  double refinement_tol = 0.0;
};

struct OptimizeOptions {
  int grid_points = 17;
  /// Golden-section stopping width; 0 selects 1e-3 * (2 / R^2).
  double refinement_tol = 0.0;
  /// Cbar values within this distance of the best are treated as ties and
  /// resolved toward the smallest |b|.
  double tie_tol = 1e-7;
  /// Tolerances for the final report at b*; the scan and refinement use the
  /// same spec loosened by one decade.
  QuadratureSpec spec{1e-9, 1e-7, 200};
  int workers = 1;
  std::function<void(std::string_view)> progress;
};

/// b* = argmax_b Cbar(b, beta) over [-2/R^2, 2/R^2]: coarse grid scan, then
/// golden-section refinement inside the bracket around the best grid point.
/// Throws std::runtime_error if more than 20% of the grid evaluations fail.
OptimizationResult optimize_b(const MuProfile& mu, AverageCoverageEvaluator& evaluator,
                              const OptimizeOptions& options = {});

OptimizationResult optimize_b(const MuProfile& mu, const NetworkParams& p,
                              const OptimizeOptions& options = {});

}  // namespace sgcov
