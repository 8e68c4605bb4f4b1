#include "entropia/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entropia/compensated_sum.hpp"
#include "entropia/error.hpp"
#include "entropia/prime_table.hpp"

namespace entropia {

double log_integral(double x) {
    if (!(x > 1.0)) throw DomainError("log_integral implemented for x > 1");
    const double u = std::log(x);
    CompensatedSum series;
    double power_over_fact = 1.0;  // u^n / (n! 2^(n-1)), built incrementally
    double inner = 0.0;            // sum_{k <= (n-1)/2} 1/(2k+1)
    for (int n = 1; n < 400; ++n) {
        power_over_fact *= (n == 1 ? u : u / (2.0 * n));
        if ((n - 1) % 2 == 0) inner += 1.0 / (n);  // n odd: add 1/n = 1/(2k+1)
        const double term = ((n & 1) ? 1.0 : -1.0) * power_over_fact * inner;
        series += term;
        if (n > u && std::fabs(term) < 1e-18 * std::fabs(series.value())) break;
    }
    return std::numbers::egamma + std::log(u) + std::sqrt(x) * series.value();
}

double riemann_R(double x, unsigned n_max) {
    if (!(x >= 2.0)) throw DomainError("riemann_R needs x >= 2");
    const auto cutoff = static_cast<unsigned>(std::floor(std::log2(x)));
    const unsigned terms = n_max == 0 ? cutoff : std::min(n_max, cutoff);
    const auto mu = mobius_table(std::max(1u, terms));
    CompensatedSum sum;
    for (unsigned n = 1; n <= terms; ++n) {
        if (mu[n] == 0) continue;
        const double root = std::pow(x, 1.0 / n);
        if (root < 2.0) break;
        sum += mu[n] / static_cast<double>(n) * log_integral(root);
    }
    return sum.value();
}

}  // namespace entropia
