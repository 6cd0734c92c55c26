#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgcov/coverage.hpp"
#include "sgcov/interference.hpp"
#include "sgcov/montecarlo.hpp"

using namespace sgcov;

namespace {

NetworkParams make(double b, double eta = 4.0, double lambda0 = 1.0) {
  NetworkParams p;
  p.b = b;
  p.eta = eta;
  p.lambda0 = lambda0;
  return p;
}

bool within_sigmas(double x, double mean, double se, double k = 3.0) { return std::abs(x - mean) <= k * se; }

}  // namespace

TEST_CASE("connection_probability examples") {
  NetworkParams p = make(0.0);
  p.noise = 0.0;
  p.q = 1e-12;
  CHECK(connection_probability(2.0, 1.0, p) == doctest::Approx(1.0).epsilon(1e-9));

  p = make(2.0 / 25);
  LaplaceQuery lq{3.0, 1.2, p.q, p};
  CHECK(connection_probability(3.0, 1.2, p) ==
        doctest::Approx(std::exp(-p.q * p.noise * std::pow(1.2, p.eta) / p.power) * laplace_interference(lq))
            .epsilon(1e-12));

  for (double r : {0.0, 4.0}) {
    double prev = 1.0;
    for (double q : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      NetworkParams pq = make(-2.0 / 25);
      pq.q = q;
      const double h = connection_probability(r, 0.7, pq);
      CHECK(h >= 0.0);
      CHECK(h <= prev + 1e-14);
      prev = h;
    }
  }
}

TEST_CASE("connection_probability matches Monte Carlo given d1") {
  // The SINR conditioned on d1 is the noise factor times the interference
  // Laplace functional; compare against the simulated functional.
  NetworkParams p = make(0.0, 4.0);
  SimConfig cfg;
  cfg.trials = 40000;
  cfg.master_seed = 21;
  cfg.params = p;
  cfg.mu_position = FixedMu{2.0, 0.0};
  const double d1 = 0.3;
  const SimEstimate est = simulate_laplace(cfg, d1);
  const double noise = std::exp(-p.q * p.noise * std::pow(d1, p.eta) / p.power);
  CHECK(within_sigmas(noise * est.mean, connection_probability(2.0, d1, p), noise * est.std_error));
}

TEST_CASE("coverage_probability limits and bounds") {
  NetworkParams p = make(0.0);
  p.noise = 0.0;
  p.q = 1e-12;
  const double non_empty = 1.0 - std::exp(-25.0 * std::numbers::pi);
  for (double r : {0.0, 2.5, 5.0}) CHECK(coverage_probability(r, p).value == doctest::Approx(non_empty).epsilon(1e-7));

  NetworkParams sparse = make(2.0 / 25, 4.0, 0.02);
  sparse.noise = 0.0;
  sparse.q = 1e-12;
  CHECK(coverage_probability(1.0, sparse).value ==
        doctest::Approx(1.0 - std::exp(-sparse.mean_count())).epsilon(1e-7));

  for (double b : {-2.0 / 25, 0.0, 2.0 / 25})
    for (double eta : {2.0, 4.0})
      for (double r : {0.0, 1.3, 3.9, 5.0}) {
        const CoverageResult c = coverage_probability(r, make(b, eta));
        CHECK(c.value >= 0.0);
        CHECK(c.value <= 1.0 - std::exp(-make(b).mean_count()));
        CHECK(c.err_estimate >= 0.0);
      }
  CHECK_THROWS_AS(coverage_probability(5.1, make(0.0)), std::domain_error);
}

TEST_CASE("coverage_probability is monotone in q and in P") {
  for (double b : {-2.0 / 25, 0.0, 2.0 / 25})
    for (double r : {0.0, 4.5}) {
      double prev = 1.0;
      for (double q : {0.5, 1.0, 2.0}) {
        NetworkParams p = make(b);
        p.q = q;
        const double c = coverage_probability(r, p).value;
        CHECK(c <= prev + 1e-9);
        prev = c;
      }
      prev = 0.0;
      for (double power : {0.5, 1.0, 2.0}) {
        NetworkParams p = make(b);
        p.power = power;
        const double c = coverage_probability(r, p).value;
        CHECK(c >= prev - 1e-9);
        prev = c;
      }
    }
}

TEST_CASE("coverage_probability matches Monte Carlo near the border") {
  for (double b : {-2.0 / 25, 0.0, 2.0 / 25}) {
    SimConfig cfg;
    cfg.trials = 50000;
    cfg.master_seed = 31;
    cfg.params = make(b, 2.0);
    cfg.mu_position = FixedMu{4.5, 1.0};
    const SimEstimate est = simulate_coverage(cfg);
    const double analytic = coverage_probability(4.5, cfg.params).value;
    INFO("b=" << b << " mc=" << est.mean << " +- " << est.std_error << " analytic=" << analytic);
    CHECK(within_sigmas(est.mean, analytic, est.std_error));
  }
}

TEST_CASE("coverage drops at the border; convex deployment has an interior sweet spot") {
  for (double b : {0.0, -2.0 / 25})
    for (double eta : {2.0, 4.0}) {
      const NetworkParams p = make(b, eta);
      const double rim = coverage_probability(5.0, p).value;
      const double inside = coverage_probability(4.75, p).value;
      INFO("b=" << b << " eta=" << eta);
      CHECK(rim < inside);
    }
  const NetworkParams convex = make(2.0 / 25, 2.0);
  double best = -1.0, best_r = -1.0;
  for (int i = 0; i <= 40; ++i) {
    const double r = 5.0 * i / 40.0;
    const double c = coverage_probability(r, convex).value;
    if (c > best) {
      best = c;
      best_r = r;
    }
  }
  CHECK(best_r > 0.0);
  CHECK(best_r < 5.0);
  CHECK(best > coverage_probability(5.0, convex).value);
  CHECK(best > coverage_probability(0.0, convex).value);
}

TEST_CASE("average coverage equals the weighted radial integral of C") {
  const NetworkParams p = make(-0.03, 4.0);
  const QuadratureSpec spec{1e-10, 1e-8, 200};
  const CoverageMoments m = coverage_moments(p, spec);
  for (double beta : {0.0, 0.05, -2.0 / 25}) {
    const MuProfile mu{beta};
    const double direct =
        2.0 / 25.0 *
        oracle::integrate([&](double r) { return mu_density(r, mu, 5.0) * coverage_probability(r, p, spec).value * r; },
                          0.0, 5.0, 1e-9);
    INFO("beta=" << beta);
    CHECK(std::abs(m.average(mu, 5.0).value - direct) < 1e-7);
    CHECK(average_coverage(p, mu, spec).value == m.average(mu, 5.0).value);
  }
}

TEST_CASE("average coverage limits and Monte Carlo agreement") {
  NetworkParams limit = make(0.0);
  limit.noise = 0.0;
  limit.q = 1e-12;
  CHECK(average_coverage(limit, MuProfile{0.03}).value ==
        doctest::Approx(1.0 - std::exp(-25.0 * std::numbers::pi)).epsilon(1e-7));

  for (double beta : {0.0, 2.0 / 25}) {
    SimConfig cfg;
    cfg.trials = 100000;
    cfg.master_seed = 41;
    cfg.params = make(0.0, 4.0);
    cfg.mu_profile = MuProfile{beta};
    cfg.mu_position = SampledMu{};
    const SimEstimate est = simulate_coverage(cfg);
    const double analytic = average_coverage(cfg.params, cfg.mu_profile).value;
    INFO("beta=" << beta << " mc=" << est.mean << " +- " << est.std_error << " analytic=" << analytic);
    CHECK(within_sigmas(est.mean, analytic, est.std_error));
  }
}

TEST_CASE("evaluator caches moments per deployment and tolerance") {
  AverageCoverageEvaluator ev(make(0.0, 4.0));
  const QuadratureSpec loose{1e-7, 1e-5, 200};
  CHECK(ev.cached() == 0);
  const double a = ev.average(0.02, MuProfile{0.01}, loose).value;
  CHECK(ev.cached() == 1);
  const double b = ev.average(0.02, MuProfile{-0.05}, loose).value;
  CHECK(ev.cached() == 1);
  CHECK(a == average_coverage(make(0.02, 4.0), MuProfile{0.01}, loose).value);
  CHECK(b == average_coverage(make(0.02, 4.0), MuProfile{-0.05}, loose).value);
  ev.average(0.02, MuProfile{0.0}, loose.scaled(0.1));
  CHECK(ev.cached() == 2);
}

TEST_CASE("optimize_b: scan shape, consistency and determinism") {
  const NetworkParams p = make(0.0, 4.0);
  OptimizeOptions quick;
  quick.grid_points = 5;
  quick.spec = {1e-7, 1e-5, 200};
  int messages = 0;
  quick.progress = [&](std::string_view) { ++messages; };
  const OptimizationResult serial = optimize_b(MuProfile{2.0 / 25}, p, quick);
  CHECK(messages > 0);
  REQUIRE(serial.scan.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(serial.scan[i].first == doctest::Approx(-0.08 + 0.04 * i));
  CHECK(serial.scan[2].first == 0.0);
  CHECK(std::abs(serial.b_star) <= 2.0 / 25);
  CHECK(serial.refinement_tol == doctest::Approx(1e-3 * 0.08));
  for (const auto& [b, v] : serial.scan) CHECK(serial.cbar_at_b_star >= v - 1e-6);

  quick.workers = 3;
  quick.progress = nullptr;
  const OptimizationResult threaded = optimize_b(MuProfile{2.0 / 25}, p, quick);
  CHECK(threaded.b_star == serial.b_star);
  CHECK(threaded.cbar_at_b_star == serial.cbar_at_b_star);
  CHECK(threaded.scan == serial.scan);

  quick.grid_points = 2;
  CHECK_THROWS_AS(optimize_b(MuProfile{0.0}, p, quick), std::domain_error);
  CHECK_THROWS_AS(optimize_b(MuProfile{0.5}, p, OptimizeOptions{}), std::domain_error);
}

TEST_CASE("optimize_b with default settings") {
  AverageCoverageEvaluator ev(make(0.0, 4.0));
  const OptimizationResult res = optimize_b(MuProfile{0.0}, ev);
  REQUIRE(res.scan.size() == 17);
  double scan_max = 0.0;
  for (const auto& [b, v] : res.scan) scan_max = std::max(scan_max, v);
  CHECK(res.cbar_at_b_star >= scan_max - 1e-6);
  CHECK(std::abs(res.b_star) <= 2.0 / 25);
  // A neighbourhood of b* is no better beyond the refinement resolution.
  for (double db : {-4 * res.refinement_tol, 4 * res.refinement_tol}) {
    const double b = std::clamp(res.b_star + db, -0.08, 0.08);
    CHECK(ev.average(b, MuProfile{0.0}, OptimizeOptions{}.spec).value <= res.cbar_at_b_star + 1e-6);
  }
  MESSAGE("b*=" << res.b_star << " cbar=" << res.cbar_at_b_star);
}
