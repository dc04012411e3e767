#include "refgraph/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "refgraph/error.hpp"

namespace refgraph {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size());
  for (std::size_t first = 0; first < order.size();) {
    std::size_t last = first;
    while (last + 1 < order.size() && values[order[last + 1]] == values[order[first]]) ++last;
    // positions first..last hold ranks first+1..last+1
    const double rank = (static_cast<double>(first) + static_cast<double>(last)) / 2.0 + 1.0;
    for (std::size_t k = first; k <= last; ++k) ranks[order[k]] = rank;
    first = last + 1;
  }
  return ranks;
}

SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw CorrelationError("series lengths differ (" + std::to_string(xs.size()) + " vs " +
                           std::to_string(ys.size()) + ")");
  }
  const std::size_t n = xs.size();
  if (n < 3) throw CorrelationError("need at least 3 observations, got " + std::to_string(n));
  auto has_nan = [](std::span<const double> v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return std::isnan(x); });
  };
  if (has_nan(xs) || has_nan(ys)) throw CorrelationError("series contains NaN");

  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  // Ranks always average to (n + 1) / 2.
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw CorrelationError("constant series");

  const double rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double z = std::abs(rho) * std::sqrt(static_cast<double>(n) - 1.0);
  return {rho, n, std::erfc(z / std::sqrt(2.0))};
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

}  // namespace refgraph
