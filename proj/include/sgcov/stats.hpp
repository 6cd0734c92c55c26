#pragma once

// Goodness-of-fit helpers for checking the simulator against analytic laws.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sgcov::stats {

/// sup_x |F_n(x) - cdf(x)| for the empirical distribution of `samples`.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| between two empirical distributions.
double ks_two_sample_statistic(std::span<const double> a, std::span<const double> b);

/// Asymptotic critical value of the one-sample statistic at level alpha,
/// sqrt(-ln(alpha / 2) / 2) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

double ks_two_sample_critical_value(std::size_t n, std::size_t m, double alpha);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace sgcov::stats
