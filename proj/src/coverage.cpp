#include "sgcov/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sgcov/interference.hpp"
#include "sgcov/nnd.hpp"

namespace sgcov {

namespace {

// Coverage tolerances at the inner levels are derived from the outer one.
constexpr double kInnerTighten = 1e-2;

CoverageResult coverage_impl(double r, const NetworkParams& p, const QuadratureSpec& d1_spec,
                             const QuadratureSpec& theta_spec) {
  const double seam = p.R - r;
  const double top = nnd_effective_support(r, p);
  auto integrand = [&](double d1) {
    if (d1 <= 0.0) return 0.0;
    const double pdf = nnd_pdf(r, d1, p);
    if (pdf == 0.0) return 0.0;
    return connection_probability(r, d1, p, theta_spec) * pdf;
  };
  QuadratureResult total{};
  auto add = [&](double lo, double hi) {
    const QuadratureResult part = integrate(integrand, lo, hi, d1_spec);
    total.value += part.value;
    total.err_estimate += part.err_estimate;
  };
  if (seam > 0.0 && seam < top) {
    add(0.0, seam);
    add(seam, top);
  } else {
    add(0.0, top);
  }
  const double ceiling = 1.0 - std::exp(-p.mean_count());
  return {std::clamp(total.value, 0.0, ceiling), total.err_estimate};
}

}  // namespace

double connection_probability(double r, double d1, const NetworkParams& p,
                              const QuadratureSpec& spec) {
  const double noise_factor = std::exp(-p.q * p.noise * std::pow(d1, p.eta) / p.power);
  if (noise_factor == 0.0) return 0.0;
  return noise_factor * laplace_interference({r, d1, p.q, p}, spec);
}

CoverageResult coverage_probability(double r, const NetworkParams& p, const QuadratureSpec& spec) {
  p.validate();
  spec.validate();
  if (!(r >= 0.0 && r <= p.R * (1.0 + 1e-12)))
    throw std::domain_error("coverage_probability: r outside [0, R]");
  return coverage_impl(std::min(r, p.R), p, spec, spec.scaled(kInnerTighten));
}

CoverageResult CoverageMoments::average(const MuProfile& mu, double R) const {
  const double scale = 2.0 / (R * R);
  const double base = 1.0 - mu.beta * R * R / 2.0;
  const double value = scale * (base * m1 + mu.beta * m3);
  const double err = scale * (std::abs(base) + std::abs(mu.beta) * R * R) * err_estimate;
  return {std::clamp(value, 0.0, 1.0), err};
}

CoverageMoments coverage_moments(const NetworkParams& p, const QuadratureSpec& spec) {
  p.validate();
  spec.validate();
  const QuadratureSpec d1_spec = spec.scaled(kInnerTighten);
  const QuadratureSpec theta_spec = spec.scaled(kInnerTighten * kInnerTighten);
  // Both moment integrals visit mostly the same r nodes; share C(r).
  std::map<double, double> memo;
  auto coverage_at = [&](double r) {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    const double c = coverage_impl(r, p, d1_spec, theta_spec).value;
    memo.emplace(r, c);
    return c;
  };
  const double R = p.R;
  // Scale the absolute tolerances to the size of each moment.
  QuadratureSpec s1 = spec, s3 = spec;
  s1.abs_tol = spec.abs_tol * R * R / 2.0;
  s3.abs_tol = spec.abs_tol * R * R * R * R / 4.0;
  const QuadratureResult m1 = integrate([&](double r) { return coverage_at(r) * r; }, 0.0, R, s1);
  const QuadratureResult m3 =
      integrate([&](double r) { return coverage_at(r) * r * r * r; }, 0.0, R, s3);
  const double err = std::max(m1.err_estimate, m3.err_estimate / (R * R));
  return {m1.value, m3.value, err};
}

CoverageResult average_coverage(const NetworkParams& p, const MuProfile& mu,
                                const QuadratureSpec& spec) {
  mu.validate(p.R);
  return coverage_moments(p, spec).average(mu, p.R);
}

AverageCoverageEvaluator::AverageCoverageEvaluator(NetworkParams base) : base_(base) {
  base_.validate();
}

CoverageMoments AverageCoverageEvaluator::moments(double b, const QuadratureSpec& spec) {
  const Key key{b, spec.rel_tol};
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const CoverageMoments m = coverage_moments(base_.with_b(b), spec);
  std::lock_guard lock(mutex_);
  cache_.emplace(key, m);
  return m;
}

std::size_t AverageCoverageEvaluator::cached() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

OptimizationResult optimize_b(const MuProfile& mu, AverageCoverageEvaluator& evaluator,
                              const OptimizeOptions& options) {
  const NetworkParams& base = evaluator.base();
  mu.validate(base.R);
  if (options.grid_points < 3) throw std::domain_error("optimize_b: grid_points must be >= 3");
  const double b_max = base.b_max();
  const double tol = options.refinement_tol > 0.0 ? options.refinement_tol : 1e-3 * b_max;
  const QuadratureSpec scan_spec = options.spec.scaled(10.0);
  auto report = [&](const std::string& msg) {
    if (options.progress) options.progress(msg);
  };

  const int n = options.grid_points;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = -b_max + 2.0 * b_max * i / (n - 1);
  grid[n / 2] = (n % 2 == 1) ? 0.0 : grid[n / 2];

  std::vector<std::optional<double>> values(n);
  auto eval_point = [&](int i) {
    try {
      values[i] = evaluator.average(grid[i], mu, scan_spec).value;
    } catch (const QuadratureError&) {
      values[i].reset();
    }
  };
  const int workers = std::max(1, std::min(options.workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) {
      eval_point(i);
      std::ostringstream msg;
      msg << "scan " << (i + 1) << "/" << n << " b=" << grid[i];
      report(msg.str());
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) eval_point(i);
      });
    pool.clear();
    report("scan done");
  }

  OptimizationResult result;
  result.refinement_tol = tol;
  int failures = 0;
  int best = -1;
  for (int i = 0; i < n; ++i) {
    if (!values[i]) {
      ++failures;
      continue;
    }
    result.scan.emplace_back(grid[i], *values[i]);
    if (best < 0 || *values[i] > *values[best]) best = i;
  }
  if (failures * 5 > n) throw std::runtime_error("optimize_b: too many failed grid evaluations");

  // Every evaluated (b, Cbar) pair, for the tie-breaking rule at the end.
  std::vector<std::pair<double, double>> seen = result.scan;
  auto cbar = [&](double b) {
    const double v = evaluator.average(b, mu, scan_spec).value;
    seen.emplace_back(b, v);
    return v;
  };

  double lo = grid[std::max(0, best - 1)];
  double hi = grid[std::min(n - 1, best + 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = cbar(x1);
  double f2 = cbar(x2);
  while (hi - lo > tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = cbar(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = cbar(x2);
    }
    std::ostringstream msg;
    msg << "refine [" << lo << ", " << hi << "]";
    report(msg.str());
  }

  double best_value = -std::numeric_limits<double>::infinity();
  for (const auto& [b, v] : seen) best_value = std::max(best_value, v);
  double b_star = 0.0;
  bool found = false;
  for (const auto& [b, v] : seen) {
    if (v < best_value - options.tie_tol) continue;
    if (!found || std::abs(b) < std::abs(b_star)) b_star = b;
    found = true;
  }
  result.b_star = b_star;
  result.cbar_at_b_star = evaluator.average(b_star, mu, options.spec).value;
  return result;
}

OptimizationResult optimize_b(const MuProfile& mu, const NetworkParams& p,
                              const OptimizeOptions& options) {
  AverageCoverageEvaluator evaluator(p);
  return optimize_b(mu, evaluator, options);
}

}  // namespace sgcov
