#include "sgcov/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "sgcov/kernels.hpp"

namespace sgcov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxRejections = 1'000'000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Per-thread scratch space for one trial.
struct Workspace {
  std::vector<PolarPoint> points;
  std::vector<double> xs, ys, gains, d2;

  void load(const std::vector<PolarPoint>& pts) {
    const std::size_t n = pts.size();
    xs.resize(n);
    ys.resize(n);
    d2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = pts[i].t * std::cos(pts[i].phi);
      ys[i] = pts[i].t * std::sin(pts[i].phi);
    }
  }
  void draw_gains(Rng& rng) {
    gains.resize(xs.size());
    std::exponential_distribution<double> fading(1.0);
    for (double& g : gains) g = fading(rng);
  }
};

struct MuLocation {
  double x, y;
};

MuLocation place_mu(const SimConfig& cfg, Rng& rng) {
  if (const auto* fixed = std::get_if<FixedMu>(&cfg.mu_position))
    return {fixed->r * std::cos(fixed->theta), fixed->r * std::sin(fixed->theta)};
  const double r = radial_inverse_cdf(uniform01(rng), cfg.mu_profile.beta, cfg.params.R);
  const double theta = kTwoPi * uniform01(rng);
  return {r * std::cos(theta), r * std::sin(theta)};
}

// Runs trial(index, workspace) -> double for every trial and reduces the
// values in index order.
template <typename Trial>
std::vector<double> run_trials(const SimConfig& cfg, Trial trial) {
  std::vector<double> values(cfg.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, cfg.trials));
  constexpr std::size_t kChunk = 256;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Workspace ws;
    for (std::size_t start = next.fetch_add(kChunk); start < cfg.trials;
         start = next.fetch_add(kChunk)) {
      const std::size_t stop = std::min(cfg.trials, start + kChunk);
      for (std::size_t i = start; i < stop; ++i) values[i] = trial(i, ws);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return values;
}

SimEstimate summarize(const std::vector<double>& values) {
  SimEstimate est;
  est.trials_used = values.size();
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / values.size();
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    est.std_error = std::sqrt(ss / (values.size() - 1) / values.size());
  }
  return est;
}

const FixedMu& require_fixed_mu(const SimConfig& cfg, const char* who) {
  const auto* fixed = std::get_if<FixedMu>(&cfg.mu_position);
  if (!fixed) throw std::invalid_argument(std::string(who) + ": requires a fixed MU position");
  return *fixed;
}

}  // namespace

Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
  return Rng(splitmix64(splitmix64(master_seed) ^ splitmix64(~trial_index)));
}

void SimConfig::validate() const {
  if (trials < 1) throw std::domain_error("SimConfig: trials must be >= 1");
  params.validate();
  mu_profile.validate(params.R);
  if (const auto* fixed = std::get_if<FixedMu>(&mu_position))
    if (!(fixed->r >= 0.0 && fixed->r <= params.R))
      throw std::domain_error("SimConfig: MU radius outside [0, R]");
}

double radial_cdf(double t, double b, double R) {
  const double a = 1.0 - b * R * R / 2.0;
  const double w = t * t;
  return std::clamp((2.0 * a * w + b * w * w) / (2.0 * R * R), 0.0, 1.0);
}

double radial_inverse_cdf(double u, double b, double R) {
  const double a = 1.0 - b * R * R / 2.0;
  const double denom = a + std::sqrt(std::max(0.0, a * a + 2.0 * b * R * R * u));
  if (denom <= 0.0) return 0.0;
  return std::min(R, std::sqrt(2.0 * R * R * u / denom));
}

void sample_deployment(const NetworkParams& params, Rng& rng, std::vector<PolarPoint>& out) {
  std::poisson_distribution<long> count(params.mean_count());
  const long n = count(rng);
  out.resize(static_cast<std::size_t>(n));
  for (auto& pt : out) {
    pt.t = radial_inverse_cdf(uniform01(rng), params.b, params.R);
    pt.phi = kTwoPi * uniform01(rng);
  }
}

std::vector<PolarPoint> sample_deployment(const NetworkParams& params, Rng& rng) {
  std::vector<PolarPoint> out;
  sample_deployment(params, rng, out);
  return out;
}

std::vector<PolarPoint> sample_deployment_by_thinning(const NetworkParams& params, Rng& rng) {
  const double a = params.a(), b = params.b, R = params.R;
  const double peak = std::max(a, a + b * R * R);  // intensity / lambda0 is monotone in t
  std::poisson_distribution<long> count(params.mean_count() * peak);
  const long n = count(rng);
  std::vector<PolarPoint> out;
  out.reserve(static_cast<std::size_t>(params.mean_count()) + 16);
  for (long i = 0; i < n; ++i) {
    const double t = R * std::sqrt(uniform01(rng));
    const double phi = kTwoPi * uniform01(rng);
    const double keep = (a + b * t * t) / peak;
    if (uniform01(rng) < keep) out.push_back({t, phi});
  }
  return out;
}

SimEstimate simulate_coverage(const SimConfig& cfg) {
  cfg.validate();
  const NetworkParams& p = cfg.params;
  const auto& k = kernels::active();
  const double half_eta = p.eta / 2.0;
  auto trial = [&](std::size_t index, Workspace& ws) -> double {
    Rng rng = trial_stream(cfg.master_seed, index);
    const MuLocation mu = place_mu(cfg, rng);
    sample_deployment(p, rng, ws.points);
    if (ws.points.empty()) return 0.0;
    ws.load(ws.points);
    ws.draw_gains(rng);
    k.squared_distances(ws.xs, ws.ys, mu.x, mu.y, ws.d2);
    const kernels::Nearest near = k.nearest(ws.d2);
    if (near.d2 == 0.0) return 1.0;  // co-located AP: unbounded signal
    const double signal = p.power * ws.gains[near.index] * std::pow(near.d2, -half_eta);
    const double interference = p.power * k.pathloss_sum(ws.d2, ws.gains, half_eta, near.d2);
    return signal / (p.noise + interference) >= p.q ? 1.0 : 0.0;
  };
  return summarize(run_trials(cfg, trial));
}

std::vector<double> NndSimulation::density() const {
  std::vector<double> out(histogram.size());
  const double total = static_cast<double>(samples.size() + empty_deployments);
  for (std::size_t i = 0; i < histogram.size(); ++i)
    out[i] = histogram[i] / (total * bin_width);
  return out;
}

NndSimulation simulate_nnd(const SimConfig& cfg, double bin_width) {
  cfg.validate();
  require_fixed_mu(cfg, "simulate_nnd");
  if (!(bin_width > 0.0)) throw std::domain_error("simulate_nnd: bin_width must be > 0");
  const NetworkParams& p = cfg.params;
  const auto& k = kernels::active();
  // NaN marks an empty deployment.
  auto trial = [&](std::size_t index, Workspace& ws) -> double {
    Rng rng = trial_stream(cfg.master_seed, index);
    const MuLocation mu = place_mu(cfg, rng);
    sample_deployment(p, rng, ws.points);
    if (ws.points.empty()) return std::numeric_limits<double>::quiet_NaN();
    ws.load(ws.points);
    k.squared_distances(ws.xs, ws.ys, mu.x, mu.y, ws.d2);
    return std::sqrt(k.nearest(ws.d2).d2);
  };
  const std::vector<double> values = run_trials(cfg, trial);

  NndSimulation sim;
  sim.bin_width = bin_width;
  const double d_max = p.R + std::get<FixedMu>(cfg.mu_position).r;
  sim.histogram.assign(static_cast<std::size_t>(std::ceil(d_max / bin_width)) + 1, 0);
  for (double v : values) {
    if (std::isnan(v)) {
      ++sim.empty_deployments;
      continue;
    }
    sim.samples.push_back(v);
    const auto bin = static_cast<std::size_t>(v / bin_width);
    ++sim.histogram[std::min(bin, sim.histogram.size() - 1)];
  }
  sim.mean_d1 = summarize(sim.samples);
  return sim;
}

SimEstimate simulate_laplace(const SimConfig& cfg, double d1, BallConditioning conditioning) {
  cfg.validate();
  require_fixed_mu(cfg, "simulate_laplace");
  if (!(d1 > 0.0)) throw std::domain_error("simulate_laplace: d1 must be > 0");
  const NetworkParams& p = cfg.params;
  const auto& k = kernels::active();
  const double half_eta = p.eta / 2.0;
  const double s = p.q * std::pow(d1, p.eta);
  const double ball = d1 * d1;
  auto trial = [&](std::size_t index, Workspace& ws) -> double {
    Rng rng = trial_stream(cfg.master_seed, index);
    const MuLocation mu = place_mu(cfg, rng);
    for (std::size_t attempt = 0;; ++attempt) {
      sample_deployment(p, rng, ws.points);
      ws.load(ws.points);
      k.squared_distances(ws.xs, ws.ys, mu.x, mu.y, ws.d2);
      if (conditioning == BallConditioning::discard || ws.d2.empty() ||
          k.nearest(ws.d2).d2 > ball)
        break;
      if (attempt + 1 >= kMaxRejections)
        throw std::runtime_error("simulate_laplace: ball is almost never empty, use discard");
    }
    ws.draw_gains(rng);
    return std::exp(-s * k.pathloss_sum(ws.d2, ws.gains, half_eta, ball));
  };
  return summarize(run_trials(cfg, trial));
}

}  // namespace sgcov
