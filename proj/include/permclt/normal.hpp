#pragma once

#include <span>

namespace permclt {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile, p in (0, 1).
double normal_quantile(double p);

/// Kolmogorov distance between the empirical law of `sorted` (ascending) and
/// N(0,1). Ties are handled by evaluating each atom on both sides.
double ks_to_normal(std::span<const double> sorted);

/// Wasserstein-1 distance estimate by quantile coupling:
/// (1/N) Σ |x_(i) − Φ⁻¹((i − 1/2)/N)|.
double w1_to_normal(std::span<const double> sorted);

}  // namespace permclt
