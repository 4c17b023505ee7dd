#pragma once

#include <cstddef>
#include <vector>

namespace swarmsim::metrics {

// Distribution summary: population standard deviation (ddof = 0) and
// linear-interpolation percentiles (quantile q sits at fractional index
// q * (n - 1) of the sorted sample).
struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double p20 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

double mean_of(const std::vector<double>& xs);    // throws on empty
double stddev_of(const std::vector<double>& xs);  // population, throws on empty

// q in [0, 1]; input need not be sorted. Throws on empty input or bad q.
double percentile(std::vector<double> xs, double q);

SummaryStats summarize(std::vector<double> xs);  // throws on empty

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
};

// Element-wise mean/std across runs: runs[r][t] -> out[t]. All runs must have
// equal length (throws otherwise).
std::vector<MeanStd> aggregate_series(const std::vector<std::vector<double>>& runs);

}  // namespace swarmsim::metrics
