#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sgcov/kernels.hpp"
#include "sgcov/montecarlo.hpp"

using namespace sgcov;

namespace {

struct Inputs {
  std::vector<double> xs, ys, gains;
};

Inputs random_inputs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::exponential_distribution<double> fading(1.0);
  Inputs in;
  for (std::size_t i = 0; i < n; ++i) {
    in.xs.push_back(coord(rng));
    in.ys.push_back(coord(rng));
    in.gains.push_back(fading(rng));
  }
  return in;
}

double scalar_pathloss_reference(const std::vector<double>& d2, const std::vector<double>& gains,
                                 double half_eta, double threshold) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < d2.size(); ++i)
    if (d2[i] > threshold) sum += gains[i] * std::pow(static_cast<long double>(d2[i]), -half_eta);
  return static_cast<double>(sum);
}

// Restores the default backend when a test case ends.
struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::force_backend(saved); }
};

}  // namespace

TEST_CASE("scalar kernels match direct evaluation") {
  const auto& k = kernels::scalar_table();
  std::vector<double> xs{0.0, 3.0, -1.0}, ys{0.0, 4.0, 1.0}, d2(3);
  k.squared_distances(xs, ys, 0.0, 0.0, d2);
  CHECK(d2 == std::vector<double>{0.0, 25.0, 2.0});
  const std::vector<double> ties{4.0, 1.0, 9.0, 1.0};
  const kernels::Nearest near = k.nearest(ties);
  CHECK(near.index == 1);
  CHECK(near.d2 == 1.0);
  const std::vector<double> g{1.0, 2.0, 0.5, 3.0};
  // Entries equal to the threshold are excluded.
  CHECK(k.pathloss_sum(ties, g, 2.0, 1.0) == doctest::Approx(1.0 / 16 + 0.5 / 81));
  CHECK(k.pathloss_sum(ties, g, 1.5, 0.0) == doctest::Approx(1.0 / 8 + 2.0 + 0.5 / 27 + 3.0));
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const kernels::KernelTable* avx = kernels::avx2_table();
  if (avx == nullptr || !kernels::cpu_has_avx2()) {
    MESSAGE("AVX2 backend unavailable; equivalence not exercised");
    return;
  }
  const auto& ref = kernels::scalar_table();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> mu(-5.0, 5.0);
  for (std::size_t n = 0; n <= 67; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      const Inputs in = random_inputs(rng, n);
      const double mx = mu(rng), my = mu(rng);
      std::vector<double> d_ref(n), d_avx(n);
      ref.squared_distances(in.xs, in.ys, mx, my, d_ref);
      avx->squared_distances(in.xs, in.ys, mx, my, d_avx);
      INFO("n=" << n << " rep=" << rep);
      CHECK(d_ref == d_avx);  // bitwise
      if (n == 0) continue;
      if (rep == 3) d_ref[n / 2] = d_avx[n / 2] = d_ref[0] = d_avx[0] = 0.5;  // forced tie
      const kernels::Nearest a = ref.nearest(d_ref), b = avx->nearest(d_avx);
      CHECK(a.index == b.index);
      CHECK(a.d2 == b.d2);
      for (double half_eta : {1.0, 2.0, 3.0, 1.25, 2.7}) {
        const double want = scalar_pathloss_reference(d_ref, in.gains, half_eta, a.d2);
        const double s = ref.pathloss_sum(d_ref, in.gains, half_eta, a.d2);
        const double v = avx->pathloss_sum(d_avx, in.gains, half_eta, a.d2);
        INFO("half_eta=" << half_eta);
        CHECK(std::abs(s - v) <= 1e-13 * std::max(1.0, std::abs(want)));
        CHECK(std::abs(s - want) <= 1e-13 * std::max(1.0, std::abs(want)));
      }
    }
}

TEST_CASE("backend selection") {
  BackendGuard guard;
  kernels::force_backend(kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  CHECK(&kernels::active() == &kernels::scalar_table());
  CHECK(kernels::backend_name(kernels::Backend::scalar) == "scalar");
  CHECK(kernels::backend_name(kernels::Backend::avx2) == "avx2");
  if (kernels::avx2_table() != nullptr && kernels::cpu_has_avx2()) {
    kernels::force_backend(kernels::Backend::avx2);
    CHECK(&kernels::active() == kernels::avx2_table());
  } else {
    CHECK_THROWS_AS(kernels::force_backend(kernels::Backend::avx2), std::runtime_error);
  }
}

TEST_CASE("simulation results do not depend on the backend") {
  if (kernels::avx2_table() == nullptr || !kernels::cpu_has_avx2()) return;
  BackendGuard guard;
  SimConfig cfg;
  cfg.trials = 3000;
  cfg.master_seed = 17;
  cfg.params.b = 2.0 / 25;
  cfg.params.eta = 3.0;
  cfg.mu_position = FixedMu{2.0, 0.0};
  kernels::force_backend(kernels::Backend::scalar);
  const SimEstimate s = simulate_coverage(cfg);
  const NndSimulation ns = simulate_nnd(cfg);
  kernels::force_backend(kernels::Backend::avx2);
  const SimEstimate v = simulate_coverage(cfg);
  const NndSimulation nv = simulate_nnd(cfg);
  CHECK(s.mean == v.mean);
  CHECK(ns.samples == nv.samples);
}
