// stats.hpp
// Normal CDF, one-sample Kolmogorov-Smirnov distance and equal-width histograms.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace entropia {

/// Phi(z) = erfc(-z / sqrt 2) / 2.
double normal_cdf(double z);

/// sup |F_n(x) - F(x)| over the sorted sample, checking both sides of each
/// jump; tied values form a single jump. DomainError on an empty sample.
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);

struct Histogram {
    std::vector<double> edges;          // strictly increasing, size = counts + 1
    std::vector<std::uint64_t> counts;
};

/// Equal-width bins over [min, max]; the last bin includes max. A constant
/// sample gets edges over [v, v + 1] and lands in the first bin.
Histogram histogram(std::span<const double> sample, unsigned bins);

}  // namespace entropia
