#include "sgcov/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace sgcov {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
    throw std::domain_error("QuadratureSpec: tolerances must be positive and max_subdivisions >= 1");
}

QuadratureSpec QuadratureSpec::scaled(double factor) const {
  QuadratureSpec s = *this;
  s.abs_tol *= factor;
  s.rel_tol *= factor;
  return s;
}

void DiffSpec::validate() const {
  if (!(base_step > 0.0) || richardson_levels < 1)
    throw std::domain_error("DiffSpec: base_step must be positive and richardson_levels >= 1");
}

namespace {

constexpr int kLegendreOrder = 20;

struct GaussLegendre {
  std::array<double, kLegendreOrder> nodes{};
  std::array<double, kLegendreOrder> weights{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre make_gauss_legendre() {
  GaussLegendre gl;
  const int n = kLegendreOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return gl;
}

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre gl = make_gauss_legendre();
  return gl;
}

// Layout of the v-range [-L, 0] used by the psi quadrature. Beyond -L the
// factor y e^v is at most e^-3 and the tail is summed analytically.
struct PsiLayout {
  double log_y;
  double lower;  // -L
  int panels;
  double panel_width;
};

PsiLayout psi_layout(double y, double x_max) {
  PsiLayout lay{};
  lay.log_y = std::log(y);
  const double length = std::max(0.0, lay.log_y) + 3.0;
  // Half-width <= 2 keeps the poles at v = -log y +- i pi outside a Bernstein
  // ellipse of parameter ~3.4; the x_max bound keeps e^(x v) well resolved.
  const double max_width = std::min(4.0, 8.0 / x_max);
  lay.lower = -length;
  lay.panels = std::max(1, static_cast<int>(std::ceil(length / max_width)));
  lay.panel_width = length / lay.panels;
  return lay;
}

// x e^(-x L) sum_n (-y e^-L)^n / (x + n)
double psi_tail(double x, double lower, double log_y) {
  const double z = std::exp(log_y + lower);
  double sum = 0.0;
  double zn = 1.0;
  for (int n = 0; n < 200; ++n) {
    const double term = zn / (x + n);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    zn *= -z;
  }
  return x * std::exp(x * lower) * sum;
}

void check_psi_args(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(x > 0.0) || y < 0.0)
    throw std::domain_error("psi: requires finite x > 0 and y >= 0");
}

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208977200790, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod21(const ScalarFunction& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 21> fv{};
  fv[10] = f(center);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[20 - j] = f(center + dx);
  }

  double resk = kWgk[10] * fv[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double pair = fv[j] + fv[20 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[20 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fv[10] - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[20 - j] - mean));

  resk *= half;
  resg *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  if (!std::isfinite(resk)) err = std::numeric_limits<double>::infinity();
  return {a, b, resk, err};
}

QuadratureResult integrate_impl(const ScalarFunction& f, double a, double b,
                                const QuadratureSpec& spec, bool& converged) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || a > b)
    throw std::domain_error("integrate: requires finite a <= b");
  converged = true;
  if (a == b) return {};

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod21(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  std::size_t evaluations = 21;
  std::size_t subdivisions = 1;

  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

  while (total_err > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      converged = false;
      break;
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      converged = false;  // interval can no longer be split
      break;
    }
    heap.pop();
    Segment left = gauss_kronrod21(f, worst.a, mid);
    Segment right = gauss_kronrod21(f, mid, worst.b);
    evaluations += 42;
    ++subdivisions;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed accumulated cancellation from the running totals.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(total)) converged = false;
  return {total, total_err, evaluations, subdivisions};
}

}  // namespace

double psi(double x, double y) {
  check_psi_args(x, y);
  if (y == 0.0) return 1.0;
  const auto& gl = gauss_legendre();
  const PsiLayout lay = psi_layout(y, x);
  const double half = 0.5 * lay.panel_width;
  double body = 0.0;
  for (int p = 0; p < lay.panels; ++p) {
    const double center = lay.lower + (p + 0.5) * lay.panel_width;
    double panel = 0.0;
    for (int i = 0; i < kLegendreOrder; ++i) {
      const double v = center + half * gl.nodes[i];
      panel += gl.weights[i] * std::exp(x * v) / (1.0 + std::exp(v + lay.log_y));
    }
    body += panel * half;
  }
  return x * body + psi_tail(x, lay.lower, lay.log_y);
}

std::array<double, 3> psi_radial_family(double eta, double y) {
  const std::array<double, 3> xs = {2.0 / eta, 3.0 / eta, 4.0 / eta};
  check_psi_args(xs[0], y);
  if (y == 0.0) return {1.0, 1.0, 1.0};
  const auto& gl = gauss_legendre();
  const PsiLayout lay = psi_layout(y, xs[2]);
  const double half = 0.5 * lay.panel_width;
  const double inv_eta = 1.0 / eta;
  std::array<double, 3> body{};
  for (int p = 0; p < lay.panels; ++p) {
    const double center = lay.lower + (p + 0.5) * lay.panel_width;
    std::array<double, 3> panel{};
    for (int i = 0; i < kLegendreOrder; ++i) {
      const double v = center + half * gl.nodes[i];
      const double s = std::exp(v * inv_eta);
      const double w = gl.weights[i] / (1.0 + std::exp(v + lay.log_y));
      const double s2 = s * s;
      panel[0] += w * s2;
      panel[1] += w * s2 * s;
      panel[2] += w * s2 * s2;
    }
    for (int k = 0; k < 3; ++k) body[k] += panel[k] * half;
  }
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k)
    out[k] = xs[k] * body[k] + psi_tail(xs[k], lay.lower, lay.log_y);
  return out;
}

QuadratureResult integrate(const ScalarFunction& f, double a, double b,
                           const QuadratureSpec& spec) {
  bool converged = true;
  QuadratureResult r = integrate_impl(f, a, b, spec, converged);
  if (!converged)
    throw QuadratureError("integrate: no convergence within " +
                              std::to_string(spec.max_subdivisions) + " subdivisions",
                          r);
  return r;
}

QuadratureResult integrate_best_effort(const ScalarFunction& f, double a, double b,
                                       const QuadratureSpec& spec) {
  bool converged = true;
  return integrate_impl(f, a, b, spec, converged);
}

double derivative(const ScalarFunction& f, double x, const DiffSpec& spec) {
  spec.validate();
  const double h0 = spec.base_step * std::max(1.0, std::abs(x));
  const int levels = spec.richardson_levels;
  std::vector<double> table(static_cast<std::size_t>(levels) + 1);
  double h = h0;
  for (int i = 0; i <= levels; ++i, h *= 0.5) {
    const double fp = f(x + h);
    const double fm = f(x - h);
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw std::domain_error("derivative: non-finite function value");
    table[i] = (fp - fm) / (2.0 * h);
  }
  // Neville-style elimination of the h^2, h^4, ... error terms.
  double factor = 4.0;
  for (int k = 1; k <= levels; ++k, factor *= 4.0)
    for (int i = levels; i >= k; --i)
      table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
  return table[levels];
}

}  // namespace sgcov
