#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sgcov/geometry.hpp"
#include "sgcov/numerics.hpp"

using namespace sgcov;

namespace {

constexpr double kPi = std::numbers::pi;

NetworkParams params_with_b(double b) {
  NetworkParams p;
  p.R = 5.0;
  p.lambda0 = 1.0;
  p.b = b;
  return p;
}

}  // namespace

TEST_CASE("network parameter validation") {
  NetworkParams p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.with_b(2.0 / 25).a() == doctest::Approx(0.0));
  CHECK_NOTHROW(p.with_b(-2.0 / 25).validate());
  CHECK_THROWS_AS(p.with_b(0.0801).validate(), std::domain_error);
  NetworkParams bad = p;
  bad.eta = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  bad = p;
  bad.noise = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  CHECK_THROWS_AS(MuProfile{0.1}.validate(5.0), std::domain_error);
}

TEST_CASE("ap_intensity examples") {
  CHECK(ap_intensity(3.3, params_with_b(0.0)) == 1.0);
  CHECK(ap_intensity(0.0, params_with_b(2.0 / 25)) == doctest::Approx(0.0));
  CHECK(ap_intensity(5.0, params_with_b(-2.0 / 25)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(ap_intensity(5.1, params_with_b(0.0)), std::domain_error);
  CHECK_THROWS_AS(ap_intensity(-0.1, params_with_b(0.0)), std::domain_error);
}

TEST_CASE("intensity integrates to the mean count") {
  for (double b : {-2.0 / 25, -0.03, 0.0, 0.05, 2.0 / 25}) {
    const NetworkParams p = params_with_b(b);
    const double total = oracle::integrate([&](double t) { return 2 * kPi * t * ap_intensity(t, p); }, 0.0, 5.0);
    CHECK(total == doctest::Approx(p.mean_count()).epsilon(1e-12));
  }
}

TEST_CASE("mu_density examples and normalisation") {
  CHECK(mu_density(2.2, MuProfile{0.0}, 5.0) == 1.0);
  CHECK(mu_density(0.0, MuProfile{2.0 / 25}, 5.0) == doctest::Approx(0.0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ub(-2.0 / 25, 2.0 / 25);
  for (int i = 0; i < 20; ++i) {
    const MuProfile mu{ub(rng)};
    const double norm = 2.0 / 25.0 * oracle::integrate([&](double r) { return mu_density(r, mu, 5.0) * r; }, 0.0, 5.0);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("intersection_angle examples") {
  CHECK(intersection_angle(0.0, 1.0, 5.0) == kPi);
  CHECK(intersection_angle(5.0, 10.0, 5.0) == doctest::Approx(0.0));
  CHECK(intersection_angle(3.0, 4.0, 5.0) == doctest::Approx(kPi / 2));
  CHECK(intersection_angle(1.0, 1.0, 5.0) == kPi);  // ball inside the disk
  CHECK_THROWS_AS(intersection_angle(1.0, 0.0, 5.0), std::domain_error);
}

TEST_CASE("border_distance examples and residual") {
  CHECK(border_distance(0.0, 1.234, 5.0) == doctest::Approx(5.0));
  CHECK(border_distance(2.0, 0.0, 5.0) == doctest::Approx(7.0));
  CHECK(border_distance(2.0, kPi, 5.0) == doctest::Approx(3.0));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ur(0.0, 5.0), ut(0.0, 2 * kPi);
  for (int i = 0; i < 500; ++i) {
    const double r = ur(rng), theta = ut(rng);
    const double s = border_distance(r, theta, 5.0);
    CHECK(s >= 5.0 - r - 1e-12);
    CHECK(s <= 5.0 + r + 1e-12);
    // theta = 0 points from the MU at (r, 0) to the centre.
    const double x = r - s * std::cos(theta), y = s * std::sin(theta);
    CHECK(std::abs(std::hypot(x, y) - 5.0) < 1e-9 * 5.0);
  }
}

TEST_CASE("clipped_ball_measure examples") {
  const NetworkParams u = params_with_b(0.0);
  CHECK(clipped_ball_measure(0.0, 5.0, u) == doctest::Approx(25 * kPi).epsilon(1e-14));
  CHECK(clipped_ball_measure(0.0, 5.0, params_with_b(2.0 / 25)) == doctest::Approx(25 * kPi).epsilon(1e-14));
  CHECK(clipped_ball_measure(1.0, 2.5, u) == doctest::Approx(kPi * 6.25).epsilon(1e-14));
  CHECK(clipped_ball_measure(4.0, 9.5, u) == doctest::Approx(25 * kPi));
  CHECK_THROWS_AS(clipped_ball_measure(1.0, -0.1, u), std::domain_error);

  const NetworkParams convex = params_with_b(2.0 / 25);
  const double oracle_value = oracle::clipped_measure_2d(4.0, 3.0, convex);
  CHECK(std::abs(clipped_ball_measure(4.0, 3.0, convex) - oracle_value) < 1e-6 * oracle_value);
}

TEST_CASE("clipped_ball_measure agrees with 2-D quadrature on a grid") {
  for (double b : {-2.0 / 25, 0.0, 2.0 / 25})
    for (double r : {0.5, 2.5, 4.5, 5.0})
      for (double d1 : {0.3, 1.7, 4.8, 6.2, 9.0}) {
        if (d1 > 5.0 + r) continue;
        const NetworkParams p = params_with_b(b);
        const double want = oracle::clipped_measure_2d(r, d1, p);
        INFO("b=" << b << " r=" << r << " d1=" << d1);
        CHECK(std::abs(clipped_ball_measure(r, d1, p) - want) < 1e-6 * want);
      }
}

TEST_CASE("clipped_ball_measure is continuous, monotone and saturates") {
  for (double b : {-2.0 / 25, 0.0, 2.0 / 25}) {
    const NetworkParams p = params_with_b(b);
    for (double r : {0.7, 2.5, 4.9}) {
      const double seam = 5.0 - r;
      const double below = clipped_ball_measure(r, seam * (1 - 1e-12), p);
      const double above = clipped_ball_measure(r, seam * (1 + 1e-12), p);
      CHECK(std::abs(above - below) < 1e-9);
      double prev = 0.0;
      for (int i = 1; i <= 400; ++i) {
        const double d1 = (5.0 + r) * i / 400.0;
        const double m = clipped_ball_measure(r, d1, p);
        CHECK(m >= prev - 1e-12);
        prev = m;
      }
      CHECK(prev == doctest::Approx(p.mean_count()).epsilon(1e-12));
    }
  }
}

TEST_CASE("clipped_ball_measure_rate is the d1 derivative") {
  for (double b : {-2.0 / 25, 0.0, 2.0 / 25}) {
    const NetworkParams p = params_with_b(b);
    for (double r : {0.0, 1.0, 3.0, 5.0})
      for (double d1 : {0.2, 1.4, 3.3, 5.5, 7.1}) {
        if (d1 >= 5.0 + r || std::abs(d1 - (5.0 - r)) < 1e-2) continue;
        const double numeric = derivative([&](double x) { return clipped_ball_measure(r, x, p); }, d1,
                                          DiffSpec{1e-3, 3});
        INFO("b=" << b << " r=" << r << " d1=" << d1);
        CHECK(std::abs(clipped_ball_measure_rate(r, d1, p) - numeric) < 1e-7 * std::max(1.0, numeric));
      }
  }
}

TEST_CASE("printed long-form bracket: verbatim disagrees, corrected agrees") {
  double worst_verbatim = 0.0;
  for (double b : {-2.0 / 25, 0.0, 2.0 / 25})
    for (double r : {1.0, 4.0, 4.9})
      for (double d1 : {5.5 - r, 5.0, 5.0 + r - 0.3}) {
        const NetworkParams p = params_with_b(b);
        const double want = clipped_ball_measure(r, d1, p);
        INFO("b=" << b << " r=" << r << " d1=" << d1);
        CHECK(std::abs(diagnostics::clipped_ball_measure_printed(r, d1, p, true) - want) < 1e-9 * want);
        worst_verbatim = std::max(worst_verbatim,
                                  std::abs(diagnostics::clipped_ball_measure_printed(r, d1, p) - want) / want);
      }
  CHECK(worst_verbatim > 0.1);
}
