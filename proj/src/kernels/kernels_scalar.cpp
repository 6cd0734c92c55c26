#include <cmath>

#include "sgcov/kernels.hpp"

namespace sgcov::kernels {

namespace {

void squared_distances(std::span<const double> xs, std::span<const double> ys, double mx,
                       double my, std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    out[i] = dx * dx + dy * dy;
  }
}

Nearest nearest(std::span<const double> d2) {
  Nearest best{0, d2[0]};
  for (std::size_t i = 1; i < d2.size(); ++i)
    if (d2[i] < best.d2) best = {i, d2[i]};
  return best;
}

double pathloss_sum(std::span<const double> d2, std::span<const double> gains, double half_eta,
                    double threshold) {
  double sum = 0.0;
  for (std::size_t i = 0; i < d2.size(); ++i)
    if (d2[i] > threshold) sum += gains[i] * std::pow(d2[i], -half_eta);
  return sum;
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{&squared_distances, &nearest, &pathloss_sum};
  return table;
}

}  // namespace sgcov::kernels
