#pragma once

// Data-parallel inner loops of the Monte Carlo simulator. Every kernel has a
// scalar reference implementation; an AVX2 variant is selected at runtime
// when the CPU supports it. Both must agree to rounding.

#include <cstddef>
#include <span>
#include <string_view>

namespace sgcov::kernels {

enum class Backend { scalar, avx2 };

struct Nearest {
  std::size_t index = 0;
  double d2 = 0.0;  // squared distance
};

struct KernelTable {
  /// out[i] = (xs[i] - mx)^2 + (ys[i] - my)^2
  void (*squared_distances)(std::span<const double> xs, std::span<const double> ys, double mx,
                            double my, std::span<double> out);
  /// Smallest entry; the lowest index wins ties. Requires a non-empty input.
  Nearest (*nearest)(std::span<const double> d2);
  /// sum over d2[i] > threshold of gains[i] * d2[i]^(-half_eta)
  double (*pathloss_sum)(std::span<const double> d2, std::span<const double> gains,
                         double half_eta, double threshold);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_has_avx2();

/// Table for the active backend. Defaults to the best supported one; the
/// SGCOV_KERNELS environment variable ("scalar" or "avx2") or
/// force_backend() overrides that choice.
const KernelTable& active();
Backend active_backend();
std::string_view backend_name(Backend backend);

/// Throws std::runtime_error if the backend is unavailable on this machine.
void force_backend(Backend backend);

}  // namespace sgcov::kernels
