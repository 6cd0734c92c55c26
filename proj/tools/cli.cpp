#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "sgcov/coverage.hpp"
#include "sgcov/interference.hpp"
#include "sgcov/kernels.hpp"
#include "sgcov/montecarlo.hpp"
#include "sgcov/nnd.hpp"
#include "sgcov/stats.hpp"

namespace sgcov::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  double R = 5.0, lambda0 = 1.0, b = 0.0, beta = 0.0, eta = 4.0, q = 1.0, power = 1.0, noise = 1.0;
  double r = 0.0, d1 = 1.0, d1_max = 0.0;
  int steps = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out, preset;
};

// Options whose absence selects a command-specific default.
struct Handles {
  CLI::Option *lambda0, *b, *beta, *eta, *r, *d1, *d1_max, *steps, *trials, *seed, *preset, *out;
};

struct Context {
  std::string command;
  std::vector<std::string> args;
  Flags f;
  Handles h;
  std::ostream& out;
  std::ostream& err;

  static bool has(const CLI::Option* o) { return o->count() > 0; }
  int steps_or(int fallback) const { return has(h.steps) ? f.steps : fallback; }
  std::size_t trials_or(std::size_t fallback) const { return has(h.trials) ? f.trials : fallback; }
  std::vector<double> list_or(const CLI::Option* o, double value, std::vector<double> fallback) const {
    return has(o) ? std::vector<double>{value} : std::move(fallback);
  }
};

struct Deployment {
  std::string name;  // preset name, or "b" for an explicit value
  double b;
};

std::vector<Deployment> deployments(const Context& c, bool figure_default) {
  if (Context::has(c.h.preset)) {
    const Preset preset = c.f.preset == "uniform" ? Preset::uniform
                          : c.f.preset == "concave" ? Preset::concave
                                                    : Preset::convex;
    return {{c.f.preset, preset_b(preset, c.f.R)}};
  }
  if (Context::has(c.h.b)) return {{"b", c.f.b}};
  if (!figure_default) return {{"uniform", 0.0}};
  return {{"uniform", preset_b(Preset::uniform, c.f.R)},
          {"concave", preset_b(Preset::concave, c.f.R)},
          {"convex", preset_b(Preset::convex, c.f.R)}};
}

NetworkParams make_params(const Context& c, double b, double eta, double lambda0) {
  NetworkParams p;
  p.R = c.f.R;
  p.lambda0 = lambda0;
  p.b = b;
  p.eta = eta;
  p.power = c.f.power;
  p.noise = c.f.noise;
  p.q = c.f.q;
  p.validate();
  return p;
}

// lo + (hi - lo) k / (n - 1) for k = 0..n-1; a single point is lo.
std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw UsageError("--steps must be >= 1");
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[k] = k == n - 1 ? hi : lo + (hi - lo) * k / (n - 1);
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_number(values[i]);
  return s;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::string_view header) { text_ << header << '\n'; }
  template <typename... Values>
  void row(Values... values) {
    bool first = true;
    ((text_ << (first ? "" : ",") << cell(values), first = false), ...);
    text_ << '\n';
  }
  std::string str() const { return text_.str(); }

 private:
  static std::string cell(double v) { return format_number(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  std::ostringstream text_;
};

// Collects the resolved settings and output paths of one run.
class Manifest {
 public:
  explicit Manifest(const Context& c) {
    set("tool", "sgcov");
    set("version", std::string(kVersion));
    set("command", c.command);
    set("timestamp", utc_timestamp());
    std::string argline;
    for (const auto& a : c.args) argline += (argline.empty() ? "" : " ") + a;
    set("args", argline);
    set("kernels", std::string(kernels::backend_name(kernels::active_backend())));
    set("R", format_number(c.f.R));
    set("power", format_number(c.f.power));
    set("noise", format_number(c.f.noise));
    set("q", format_number(c.f.q));
  }
  void set(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
  void set(const std::string& key, const std::vector<double>& values) { set(key, join(values)); }
  void add_output(const std::string& path) { outputs_.push_back(path); }

  std::string text() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += k + "=" + v + "\n";
    for (const auto& path : outputs_) s += "output=" + path + "\n";
    return s;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> outputs_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + path);
  file << content;
  if (!file) throw std::runtime_error("failed writing " + path);
}

// Sends content to --out (optionally with a name suffix) or to stdout.
void emit(const Context& c, Manifest& m, const std::string& content, const std::string& suffix = "") {
  if (c.f.out.empty()) {
    c.out << content;
    m.add_output("-");
    return;
  }
  std::string path = c.f.out;
  if (!suffix.empty()) {
    const std::filesystem::path p(c.f.out);
    path = (p.parent_path() / (p.stem().string() + "_" + suffix + p.extension().string())).string();
  }
  write_file(path, content);
  m.add_output(path);
}

void finish(const Context& c, const Manifest& m) {
  const std::string text = m.text();
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) c.err << "# " << line << '\n';
  if (!c.f.out.empty()) write_file(c.f.out + ".manifest", text);
}

void require_file_for_panels(const Context& c, std::size_t panels) {
  if (panels > 1 && c.f.out.empty())
    throw UsageError(c.command + ": without --b or --preset one file per preset is written; pass --out");
}

int cmd_nnd(Context& c) {
  const auto deps = deployments(c, true);
  require_file_for_panels(c, deps.size());
  const std::vector<double> rs = c.list_or(c.h.r, c.f.r, linspace(0.0, c.f.R, 5));
  double r_max = 0.0;
  for (double r : rs) r_max = std::max(r_max, r);
  const double d1_max = Context::has(c.h.d1_max) ? c.f.d1_max : c.f.R + r_max;
  if (!(d1_max > 0.0)) throw UsageError("--d1-max must be > 0");
  const int steps = c.steps_or(200);
  if (steps < 1) throw UsageError("--steps must be >= 1");

  Manifest m(c);
  m.set("lambda0", format_number(c.f.lambda0));
  m.set("r", rs);
  m.set("d1_max", format_number(d1_max));
  m.set("steps", std::to_string(steps));
  for (const auto& dep : deps) {
    const NetworkParams p = make_params(c, dep.b, c.f.eta, c.f.lambda0);
    for (double r : rs)
      if (!(r >= 0.0 && r <= p.R)) throw UsageError("--r must lie in [0, R]");
    m.set(deps.size() > 1 ? "b[" + dep.name + "]" : "b", format_number(dep.b));
    CsvWriter csv("r,d1,pdf");
    for (double r : rs)
      for (int k = 1; k <= steps; ++k) {
        const double d1 = d1_max * k / steps;
        csv.row(r, d1, nnd_pdf(r, d1, p));
      }
    emit(c, m, csv.str(), deps.size() > 1 ? dep.name : "");
  }
  finish(c, m);
  return kOk;
}

int cmd_laplace(Context& c) {
  const auto deps = deployments(c, true);
  require_file_for_panels(c, deps.size());
  const double eta = Context::has(c.h.eta) ? c.f.eta : 6.0;
  const std::vector<double> rs = c.list_or(c.h.r, c.f.r, linspace(0.0, c.f.R, c.steps_or(101)));
  const std::vector<double> d1s = c.list_or(c.h.d1, c.f.d1, {0.5, 1.0, 2.0});

  Manifest m(c);
  m.set("lambda0", format_number(c.f.lambda0));
  m.set("eta", format_number(eta));
  m.set("r", rs);
  m.set("d1", d1s);
  for (const auto& dep : deps) {
    m.set(deps.size() > 1 ? "b[" + dep.name + "]" : "b", format_number(dep.b));
    LaplaceQuery query;
    query.params = make_params(c, dep.b, eta, c.f.lambda0);
    query.q = c.f.q;
    CsvWriter csv("r,d1,laplace");
    for (double d1 : d1s)
      for (double r : rs) {
        query.r = r;
        query.d1 = d1;
        csv.row(r, d1, laplace_interference(query));
      }
    emit(c, m, csv.str(), deps.size() > 1 ? dep.name : "");
  }
  finish(c, m);
  return kOk;
}

int cmd_coverage(Context& c) {
  const auto deps = deployments(c, true);
  const std::vector<double> etas = c.list_or(c.h.eta, c.f.eta, {2.0, 4.0});
  const std::vector<double> lambdas = c.list_or(c.h.lambda0, c.f.lambda0, {1.0, 5.0});
  const std::vector<double> rs = c.list_or(c.h.r, c.f.r, linspace(0.0, c.f.R, c.steps_or(51)));

  Manifest m(c);
  m.set("lambda0", lambdas);
  m.set("eta", etas);
  m.set("r", rs);
  std::vector<double> bs;
  for (const auto& dep : deps) bs.push_back(dep.b);
  m.set("b", bs);
  CsvWriter csv("r,b,eta,lambda0,coverage,err_estimate");
  for (double lambda0 : lambdas)
    for (double eta : etas)
      for (const auto& dep : deps) {
        const NetworkParams p = make_params(c, dep.b, eta, lambda0);
        for (double r : rs) {
          if (!(r >= 0.0 && r <= p.R)) throw UsageError("--r must lie in [0, R]");
          const CoverageResult res = coverage_probability(r, p);
          csv.row(r, dep.b, eta, lambda0, res.value, res.err_estimate);
        }
      }
  emit(c, m, csv.str());
  finish(c, m);
  return kOk;
}

int cmd_optimize(Context& c) {
  if (Context::has(c.h.b) || Context::has(c.h.preset))
    throw UsageError("optimize searches over b; --b and --preset do not apply");
  const double b_max = 2.0 / (c.f.R * c.f.R);
  const std::vector<double> betas = c.list_or(c.h.beta, c.f.beta, linspace(-b_max, b_max, c.steps_or(9)));
  const std::vector<double> etas = c.list_or(c.h.eta, c.f.eta, {2.0, 4.0});
  const std::vector<double> lambdas = c.list_or(c.h.lambda0, c.f.lambda0, {1.0, 5.0});
  for (double beta : betas) MuProfile{beta}.validate(c.f.R);

  Manifest m(c);
  m.set("beta", betas);
  m.set("eta", etas);
  m.set("lambda0", lambdas);
  m.set("workers", std::to_string(c.f.workers));
  CsvWriter csv("beta,eta,lambda0,b_star,cbar");
  for (double lambda0 : lambdas)
    for (double eta : etas) {
      AverageCoverageEvaluator evaluator(make_params(c, 0.0, eta, lambda0));
      for (double beta : betas) {
        const std::string tag = "[optimize lambda0=" + format_number(lambda0) + " eta=" + format_number(eta) +
                                " beta=" + format_number(beta) + "] ";
        OptimizeOptions options;
        options.workers = c.f.workers;
        options.progress = [&](std::string_view msg) { c.err << tag << msg << '\n'; };
        const OptimizationResult res = optimize_b(MuProfile{beta}, evaluator, options);
        c.err << tag << "b*=" << format_number(res.b_star) << " cbar=" << format_number(res.cbar_at_b_star)
              << '\n';
        csv.row(beta, eta, lambda0, res.b_star, res.cbar_at_b_star);
      }
    }
  emit(c, m, csv.str());
  finish(c, m);
  return kOk;
}

int cmd_simulate(Context& c) {
  if (!Context::has(c.h.seed)) throw UsageError("simulate requires --seed for reproducibility");
  const auto deps = deployments(c, false);
  SimConfig cfg;
  cfg.trials = c.trials_or(10000);
  cfg.master_seed = c.f.seed;
  cfg.params = make_params(c, deps.front().b, c.f.eta, c.f.lambda0);
  cfg.mu_profile = MuProfile{c.f.beta};
  cfg.workers = c.f.workers;
  if (Context::has(c.h.r))
    cfg.mu_position = FixedMu{c.f.r, 0.0};
  else
    cfg.mu_position = SampledMu{};
  cfg.validate();

  Manifest m(c);
  m.set("lambda0", format_number(c.f.lambda0));
  m.set("b", format_number(cfg.params.b));
  m.set("eta", format_number(cfg.params.eta));
  m.set("mu", Context::has(c.h.r) ? "fixed r=" + format_number(c.f.r) : "sampled beta=" + format_number(c.f.beta));
  m.set("trials", std::to_string(cfg.trials));
  m.set("seed", std::to_string(cfg.master_seed));
  const SimEstimate est = simulate_coverage(cfg);
  CsvWriter csv("mean,std_error,trials");
  csv.row(est.mean, est.std_error, est.trials_used);
  emit(c, m, csv.str());
  finish(c, m);
  return kOk;
}

// ---- validate -------------------------------------------------------------

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(const std::string& name, double measured, double limit, bool pass) {
    out_ << (pass ? "PASS " : "FAIL ") << name << ": measured " << format_number(measured) << ", limit "
         << format_number(limit) << '\n';
    failures_ += pass ? 0 : 1;
    ++checks_;
  }
  // |estimate - reference| in standard errors.
  void agreement(const std::string& name, double estimate, double std_error, double reference, double sigmas) {
    const double dev = std::abs(estimate - reference);
    const double z = std_error > 0.0 ? dev / std_error : (dev < 1e-12 ? 0.0 : INFINITY);
    out_ << "     " << name << ": estimate " << format_number(estimate) << " +- " << format_number(std_error)
         << ", reference " << format_number(reference) << '\n';
    check(name + " (standard errors)", z, sigmas, z <= sigmas);
  }
  void info(const std::string& text) { out_ << "INFO " << text << '\n'; }
  int failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
  int checks_ = 0;
};

int cmd_validate(Context& c) {
  const auto deps = deployments(c, false);
  const NetworkParams p = make_params(c, deps.front().b, c.f.eta, c.f.lambda0);
  const MuProfile mu{c.f.beta};
  mu.validate(p.R);
  const std::size_t trials = c.trials_or(20000);
  const std::uint64_t seed = Context::has(c.h.seed) ? c.f.seed : 1;
  const double sigmas = 4.0, alpha = 1e-3;
  const std::vector<double> rs{0.0, 0.5 * p.R, 0.9 * p.R};

  std::ostringstream text;
  Report rep(text);
  rep.info("R=" + format_number(p.R) + " lambda0=" + format_number(p.lambda0) + " b=" + format_number(p.b) +
           " eta=" + format_number(p.eta) + " q=" + format_number(p.q) + " P=" + format_number(p.power) +
           " N=" + format_number(p.noise) + " beta=" + format_number(mu.beta) + " trials=" +
           std::to_string(trials) + " seed=" + std::to_string(seed));
  const QuadratureSpec tight{1e-13, 1e-11, 400};
  const double mass = 1.0 - std::exp(-p.mean_count());

  for (double r : rs) {
    auto f = [&](double d) { return nnd_pdf(r, d, p); };
    const double seam = p.R - r;
    const double total = integrate(f, 0.0, seam, tight).value + integrate(f, seam, p.R + r, tight).value;
    const double dev = std::abs(total - mass);
    rep.check("nnd normalisation r=" + format_number(r), dev, 1e-6, dev < 1e-6);
  }

  SimConfig cfg;
  cfg.trials = trials;
  cfg.params = p;
  cfg.workers = c.f.workers;
  cfg.mu_profile = mu;

  {
    const double r = 0.5 * p.R;
    cfg.master_seed = seed;
    cfg.mu_position = FixedMu{r, 0.0};
    const NndSimulation sim = simulate_nnd(cfg);
    const double d = sim.samples.empty()
                         ? 0.0
                         : stats::ks_statistic(sim.samples, [&](double x) { return (1.0 - void_probability(r, x, p)) / mass; });
    const double crit = sim.samples.empty() ? 1.0 : stats::ks_critical_value(sim.samples.size(), alpha);
    rep.check("nnd KS distance vs analytic CDF r=" + format_number(r), d, crit, d < crit);
  }

  {
    const std::size_t draws = std::min<std::size_t>(trials, 10000);
    std::vector<double> radii, thinned;
    double count = 0.0;
    for (std::size_t i = 0; i < draws; ++i) {
      Rng rng = trial_stream(seed + 1, i);
      const auto pts = sample_deployment(p, rng);
      count += pts.size();
      if (radii.size() < 20000)
        for (const auto& pt : pts) radii.push_back(pt.t);
      Rng rng2 = trial_stream(seed + 2, i);
      if (thinned.size() < 20000)
        for (const auto& pt : sample_deployment_by_thinning(p, rng2)) thinned.push_back(pt.t);
    }
    rep.agreement("deployment mean count", count / draws, std::sqrt(p.mean_count() / draws), p.mean_count(),
                  sigmas);
    if (!radii.empty() && !thinned.empty()) {
      const double d = stats::ks_statistic(radii, [&](double t) { return radial_cdf(t, p.b, p.R); });
      const double crit = stats::ks_critical_value(radii.size(), alpha);
      rep.check("radial law KS distance", d, crit, d < crit);
      const double d2 = stats::ks_two_sample_statistic(radii, thinned);
      const double crit2 = stats::ks_two_sample_critical_value(radii.size(), thinned.size(), alpha);
      rep.check("thinning vs inverse-CDF KS distance", d2, crit2, d2 < crit2);
    }
  }

  const double d1 = std::min(0.5 * p.R, 1.0 / std::sqrt(p.lambda0));
  for (double r : {0.0, 0.9 * p.R}) {
    cfg.master_seed = seed + 3;
    cfg.mu_position = FixedMu{r, 0.0};
    const SimEstimate est = simulate_laplace(cfg, d1);
    rep.agreement("laplace MC r=" + format_number(r) + " d1=" + format_number(d1), est.mean, est.std_error,
                  laplace_interference(LaplaceQuery{r, d1, p.q, p}), sigmas);
  }

  for (double r : rs) {
    cfg.master_seed = seed + 4;
    cfg.mu_position = FixedMu{r, 0.0};
    const SimEstimate est = simulate_coverage(cfg);
    rep.agreement("coverage MC r=" + format_number(r), est.mean, est.std_error, coverage_probability(r, p).value,
                  sigmas);
  }

  {
    cfg.master_seed = seed + 5;
    cfg.mu_position = SampledMu{};
    const SimEstimate est = simulate_coverage(cfg);
    rep.agreement("average coverage MC beta=" + format_number(mu.beta), est.mean, est.std_error,
                  average_coverage(p, mu).value, sigmas);
  }

  NetworkParams centre = p;
  for (double d : {0.1, 0.5, 1.0, 2.0}) {
    if (d > p.R) continue;
    const double general = laplace_interference(LaplaceQuery{0.0, d, p.q, centre});
    const double printed = diagnostics::laplace_center_closed_form(d, p.q, centre);
    rep.info("r=0 closed form vs general form d1=" + format_number(d) + ": closed " + format_number(printed) +
             ", general " + format_number(general) + ", difference " + format_number(printed - general));
  }
  text << (rep.failures() == 0 ? "OK " : "FAILED ") << rep.checks() - rep.failures() << "/" << rep.checks()
       << " checks passed\n";

  Manifest m(c);
  m.set("lambda0", format_number(p.lambda0));
  m.set("b", format_number(p.b));
  m.set("eta", format_number(p.eta));
  m.set("beta", format_number(mu.beta));
  m.set("trials", std::to_string(trials));
  m.set("seed", std::to_string(seed));
  emit(c, m, text.str());
  finish(c, m);
  return rep.failures() == 0 ? kOk : kValidationFailed;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coverage analysis of finite cellular networks with non-uniform access point deployments",
               "sgcov"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  Handles h{};
  app.add_option("--R", f.R, "Radius of the deployment disk")->capture_default_str();
  h.lambda0 = app.add_option("--lambda0", f.lambda0, "AP intensity scale")->capture_default_str();
  h.b = app.add_option("--b", f.b, "Deployment shape, in [-2/R^2, 2/R^2]");
  h.preset = app.add_option("--preset", f.preset, "Deployment preset")
                 ->check(CLI::IsMember({"uniform", "concave", "convex"}))
                 ->excludes(h.b);
  h.beta = app.add_option("--beta", f.beta, "MU profile shape, in [-2/R^2, 2/R^2]")->capture_default_str();
  h.eta = app.add_option("--eta", f.eta, "Pathloss exponent (> 2)");
  app.add_option("--q", f.q, "SINR threshold")->capture_default_str();
  app.add_option("--power", f.power, "Transmit power")->capture_default_str();
  app.add_option("--noise", f.noise, "Noise power")->capture_default_str();
  h.r = app.add_option("--r", f.r, "MU distance from the centre");
  h.d1 = app.add_option("--d1", f.d1, "Serving AP distance");
  h.d1_max = app.add_option("--d1-max", f.d1_max, "Upper end of the d1 grid (nnd)");
  h.steps = app.add_option("--steps", f.steps, "Grid points")->check(CLI::PositiveNumber);
  h.trials = app.add_option("--trials", f.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  h.seed = app.add_option("--seed", f.seed, "Master seed of the Monte Carlo streams");
  h.out = app.add_option("--out", f.out, "Output file (default: standard output)");
  app.add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.set_config("--config", "", "key=value file; flags override it");

  app.add_subcommand("nnd", "Nearest-neighbour distance pdf as CSV r,d1,pdf");
  app.add_subcommand("laplace", "Laplace functional of the interference as CSV r,d1,laplace");
  app.add_subcommand("coverage", "Coverage probability as CSV r,b,eta,lambda0,coverage,err_estimate");
  app.add_subcommand("optimize", "Coverage-maximising b as CSV beta,eta,lambda0,b_star,cbar");
  app.add_subcommand("simulate", "Monte Carlo coverage as CSV mean,std_error,trials");
  app.add_subcommand("validate", "Analytic-vs-simulation checks; exit status 1 on any failure");

  std::vector<const char*> argv{"sgcov"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Context c{app.get_subcommands().front()->get_name(), args, f, h, out, err};
  try {
    if (c.command == "nnd") return cmd_nnd(c);
    if (c.command == "laplace") return cmd_laplace(c);
    if (c.command == "coverage") return cmd_coverage(c);
    if (c.command == "optimize") return cmd_optimize(c);
    if (c.command == "simulate") return cmd_simulate(c);
    return cmd_validate(c);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailed;
  }
}

}  // namespace sgcov::cli
