#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entropia/error.hpp"
#include "entropia/rng.hpp"
#include "entropia/stats.hpp"

using namespace entropia;

namespace {

double inverse_normal(double u) {
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Evaluates the empirical CDF from scratch at every distinct sample value,
// from both sides.
double brute_ks(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (double v : xs) {
        const auto below = static_cast<double>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
        const auto upto = static_cast<double>(std::upper_bound(xs.begin(), xs.end(), v) - xs.begin());
        d = std::max({d, std::abs(upto / n - cdf(v)), std::abs(below / n - cdf(v))});
    }
    return d;
}

double normal_draw(Rng& rng) {
    // Box-Muller on the portable uniform
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

TEST_CASE("normal_cdf values") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(std::abs(normal_cdf(1.96) - 0.975002104851779563787) < 1e-14);
    CHECK(std::abs(normal_cdf(1.0) - 0.841344746068542948585) < 1e-14);
    CHECK(std::abs(normal_cdf(3.0) - 0.998650101968369905473) < 1e-14);
    CHECK(std::abs(normal_cdf(-5.0) - 2.86651571879193911673e-7) < 1e-18);
    CHECK(normal_cdf(-8.0) < 1e-14);
    CHECK(normal_cdf(-8.0) == doctest::Approx(6.22096057427178412351e-16).epsilon(1e-12));
}

TEST_CASE("normal_cdf symmetry and monotonicity") {
    double prev = 0.0;
    for (double z = -10.0; z <= 10.0; z += 0.01) {
        CHECK(std::abs(normal_cdf(z) + normal_cdf(-z) - 1.0) <= 1e-12);
        CHECK(normal_cdf(z) >= prev);
        prev = normal_cdf(z);
    }
}

TEST_CASE("ks_statistic examples") {
    std::vector<double> quantiles;
    for (int i = 1; i <= 100; ++i) quantiles.push_back(inverse_normal((i - 0.5) / 100.0));
    CHECK(ks_statistic(quantiles, normal_cdf) <= 0.005 + 1e-12);

    const std::vector<double> zeros{0, 0, 0};
    CHECK(ks_statistic(zeros, normal_cdf) == doctest::Approx(0.5));
    const std::vector<double> median{0.0};
    CHECK(ks_statistic(median, normal_cdf) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, normal_cdf), DomainError);
}

TEST_CASE("ks_statistic matches a from-scratch recomputation, with ties") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> xs(static_cast<std::size_t>(rng.between(1, 300)));
        for (auto& x : xs) x = std::round(normal_draw(rng) * 4.0) / 4.0;  // heavy ties
        const double d = ks_statistic(xs, normal_cdf);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        CHECK(d == doctest::Approx(brute_ks(xs, normal_cdf)).epsilon(1e-12));
        // duplicating existing points changes nothing when the ECDF is rebuilt
        auto doubled = xs;
        doubled.insert(doubled.end(), xs.begin(), xs.end());
        CHECK(ks_statistic(doubled, normal_cdf) == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("histogram") {
    const std::vector<double> a{1, 2, 3, 4};
    const auto h = histogram(a, 2);
    CHECK(h.counts == std::vector<std::uint64_t>{2, 2});
    CHECK(h.edges.front() == 1.0);
    CHECK(h.edges.back() == 4.0);

    const std::vector<double> flat{7, 7, 7};
    const auto f = histogram(flat, 5);
    CHECK(std::count_if(f.counts.begin(), f.counts.end(), [](auto c) { return c > 0; }) == 1);
    CHECK(std::accumulate(f.counts.begin(), f.counts.end(), std::uint64_t{0}) == 3);

    Rng rng(1);
    std::vector<double> normal(10'000);
    for (auto& x : normal) x = normal_draw(rng);
    const auto n = histogram(normal, 20);
    CHECK(n.counts.size() == 20);
    CHECK(n.edges.size() == 21);
    CHECK(std::accumulate(n.counts.begin(), n.counts.end(), std::uint64_t{0}) == 10'000);
    for (std::size_t i = 1; i < n.edges.size(); ++i) CHECK(n.edges[i] > n.edges[i - 1]);
    CHECK(n.counts.front() > 0);
    CHECK(n.counts.back() > 0);

    CHECK_THROWS_AS(histogram(std::vector<double>{}, 3), DomainError);
    CHECK_THROWS_AS(histogram(a, 0), DomainError);
}
