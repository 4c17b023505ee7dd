#include "swarmsim/metrics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmsim::metrics {

namespace {

double percentile_sorted(const std::vector<double>& sorted, double q) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double idx = q * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(idx);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = idx - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double stddev_of(const std::vector<double>& xs) {
  const double m = mean_of(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size()));
}

double percentile(std::vector<double> xs, double q) {
  if (xs.empty()) throw std::invalid_argument("percentile of empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("percentile quantile outside [0,1]");
  std::sort(xs.begin(), xs.end());
  return percentile_sorted(xs, q);
}

SummaryStats summarize(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("summary of empty sample");
  SummaryStats s;
  s.count = xs.size();
  s.mean = mean_of(xs);
  s.stddev = stddev_of(xs);
  std::sort(xs.begin(), xs.end());
  s.min = xs.front();
  s.p20 = percentile_sorted(xs, 0.20);
  s.p50 = percentile_sorted(xs, 0.50);
  s.p75 = percentile_sorted(xs, 0.75);
  s.max = xs.back();
  return s;
}

std::vector<MeanStd> aggregate_series(const std::vector<std::vector<double>>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate of zero runs");
  const std::size_t len = runs.front().size();
  for (const auto& r : runs) {
    if (r.size() != len) throw std::invalid_argument("aggregate over ragged runs");
  }
  std::vector<MeanStd> out(len);
  std::vector<double> column(runs.size());
  for (std::size_t t = 0; t < len; ++t) {
    for (std::size_t r = 0; r < runs.size(); ++r) column[r] = runs[r][t];
    out[t].mean = mean_of(column);
    out[t].stddev = stddev_of(column);
  }
  return out;
}

}  // namespace swarmsim::metrics
