#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace refgraph {

/// 1-based fractional ranks: tied values share the mean of the rank range
/// they occupy, e.g. {10, 20, 20, 30} -> {1, 2.5, 2.5, 4}.
std::vector<double> average_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0.0;       ///< in [-1, 1]
  std::size_t n = 0;
  double p_approx = 1.0;  ///< two-tailed, normal approximation z = rho * sqrt(n - 1)
};

/// Spearman's rank correlation: the Pearson correlation of the average ranks.
/// Throws CorrelationError when the lengths differ, n < 3, a value is NaN, or
/// either series is constant.
SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys);

/// Middle element of the sorted values, or the mean of the middle two when
/// the count is even. Throws std::invalid_argument when empty.
double median(std::vector<double> values);

}  // namespace refgraph
