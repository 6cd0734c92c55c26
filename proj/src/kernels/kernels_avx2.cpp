// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "sgcov/kernels.hpp"

namespace sgcov::kernels {

namespace {

// Integer half-exponents (eta = 2, 4, 6, ...) are raised by repeated
// multiplication in registers; others fall back to pow per lane.
constexpr int kMaxIntegerPower = 16;

void squared_distances(std::span<const double> xs, std::span<const double> ys, double mx,
                       double my, std::span<double> out) {
  const std::size_t n = xs.size();
  const __m256d vmx = _mm256_set1_pd(mx);
  const __m256d vmy = _mm256_set1_pd(my);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs.data() + i), vmx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + i), vmy);
    // No FMA here so the result is bitwise equal to the scalar kernel.
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    out[i] = dx * dx + dy * dy;
  }
}

Nearest nearest(std::span<const double> d2) {
  const std::size_t n = d2.size();
  std::size_t i = 0;
  Nearest best{0, d2[0]};
  if (n >= 8) {
    __m256d vmin = _mm256_loadu_pd(d2.data());
    for (i = 4; i + 4 <= n; i += 4) vmin = _mm256_min_pd(vmin, _mm256_loadu_pd(d2.data() + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmin);
    double m = lanes[0];
    for (int k = 1; k < 4; ++k) m = std::min(m, lanes[k]);
    for (; i < n; ++i) m = std::min(m, d2[i]);
    // First index holding the minimum, matching the scalar tie rule.
    const __m256d target = _mm256_set1_pd(m);
    for (std::size_t j = 0; j + 4 <= n; j += 4) {
      const int mask =
          _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(d2.data() + j), target, _CMP_EQ_OQ));
      if (mask != 0) return {j + static_cast<std::size_t>(__builtin_ctz(mask)), m};
    }
    for (std::size_t j = n - n % 4; j < n; ++j)
      if (d2[j] == m) return {j, m};
    return {0, d2[0]};
  }
  for (i = 1; i < n; ++i)
    if (d2[i] < best.d2) best = {i, d2[i]};
  return best;
}

double pathloss_sum(std::span<const double> d2, std::span<const double> gains, double half_eta,
                    double threshold) {
  const std::size_t n = d2.size();
  const bool integer_power =
      half_eta == std::floor(half_eta) && half_eta >= 1.0 && half_eta <= kMaxIntegerPower;
  if (!integer_power) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (d2[i] > threshold) sum += gains[i] * std::pow(d2[i], -half_eta);
    return sum;
  }
  const int power = static_cast<int>(half_eta);
  const __m256d vthr = _mm256_set1_pd(threshold);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(d2.data() + i);
    const __m256d mask = _mm256_cmp_pd(v, vthr, _CMP_GT_OQ);
    // Masked-out lanes divide 1 by 1 to stay finite.
    const __m256d inv = _mm256_div_pd(one, _mm256_blendv_pd(one, v, mask));
    __m256d pw = inv;
    for (int k = 1; k < power; ++k) pw = _mm256_mul_pd(pw, inv);
    const __m256d g = _mm256_and_pd(_mm256_loadu_pd(gains.data() + i), mask);
    acc = _mm256_fmadd_pd(g, pw, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    if (!(d2[i] > threshold)) continue;
    const double inv = 1.0 / d2[i];
    double pw = inv;
    for (int k = 1; k < power; ++k) pw *= inv;
    sum += gains[i] * pw;
  }
  return sum;
}

}  // namespace

const KernelTable* avx2_table() {
  static constexpr KernelTable table{&squared_distances, &nearest, &pathloss_sum};
  return &table;
}

}  // namespace sgcov::kernels
