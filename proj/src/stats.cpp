#include "entropia/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entropia/error.hpp"

namespace entropia {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw DomainError("KS statistic needs a non-empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double f = cdf(sorted[i]);
        const double below = static_cast<double>(i) / n;  // F_n just left of the jump
        const double at = static_cast<double>(j) / n;     // F_n at the jump
        d = std::max({d, at - f, f - below});
        i = j;
    }
    return d;
}

Histogram histogram(std::span<const double> sample, unsigned bins) {
    if (sample.empty()) throw DomainError("histogram needs a non-empty sample");
    if (bins < 1) throw DomainError("histogram needs at least one bin");
    const auto [mn, mx] = std::minmax_element(sample.begin(), sample.end());
    const double lo = *mn;
    const double span = *mx > *mn ? *mx - *mn : 1.0;
    Histogram h;
    h.edges.resize(bins + 1);
    for (unsigned k = 0; k <= bins; ++k) h.edges[k] = lo + span * static_cast<double>(k) / bins;
    if (*mx > *mn) h.edges[bins] = *mx;
    h.counts.assign(bins, 0);
    for (double x : sample) {
        auto k = static_cast<std::size_t>((x - lo) / span * bins);
        if (k >= bins) k = bins - 1;
        ++h.counts[k];
    }
    return h;
}

}  // namespace entropia
