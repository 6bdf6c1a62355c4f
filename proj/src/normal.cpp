#include "permclt/normal.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>

#include "permclt/error.hpp"

namespace permclt {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("normal_quantile: p must be in (0,1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double ks_to_normal(std::span<const double> sorted) {
  const auto n = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double phi = normal_cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - phi;
    const double below = phi - static_cast<double>(i) / n;
    sup = std::max({sup, above, below});
  }
  return sup;
}

double w1_to_normal(std::span<const double> sorted) {
  const auto n = static_cast<double>(sorted.size());
  double total = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double q = normal_quantile((static_cast<double>(i) + 0.5) / n);
    total += std::abs(sorted[i] - q);
  }
  return total / n;
}

}  // namespace permclt
