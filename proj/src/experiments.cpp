#include "entropia/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "entropia/coding.hpp"
#include "entropia/compensated_sum.hpp"
#include "entropia/distribution.hpp"
#include "entropia/error.hpp"
#include "entropia/riemann.hpp"
#include "entropia/rng.hpp"
#include "entropia/stats.hpp"

namespace entropia {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

void require_range(const PrimeTable& table, std::uint64_t n, std::uint64_t min_n, const char* op) {
    require(n >= min_n, std::string(op) + " needs N >= " + std::to_string(min_n));
    require(n <= table.limit(), std::string(op) + ": N exceeds the prime table limit");
}

enum class Order { increasing, decreasing, nondecreasing };

bool monotone(const ExperimentReport::Series& s, Order order, double from_x = 0.0) {
    const std::pair<double, double>* prev = nullptr;
    for (const auto& pt : s) {
        if (pt.first < from_x) continue;
        if (prev) {
            const bool ok = order == Order::increasing   ? pt.second > prev->second
                            : order == Order::decreasing ? pt.second < prev->second
                                                         : pt.second >= prev->second;
            if (!ok) return false;
        }
        prev = &pt;
    }
    return true;
}

double lnln(double x) { return std::log(std::log(x)); }

ExperimentReport make_report(const char* name, std::uint64_t n) {
    ExperimentReport r;
    r.name = name;
    r.n_limit = n;
    return r;
}

// Walks primes once, recording a running compensated sum at each checkpoint.
template <class Term>
std::vector<double> prime_sums_at(const PrimeTable& table, const std::vector<std::uint64_t>& points, Term term) {
    std::vector<double> out;
    out.reserve(points.size());
    CompensatedSum sum;
    std::size_t next = 0;
    table.for_each_prime(points.back(), [&](std::uint64_t p) {
        while (next < points.size() && points[next] < p) out.push_back(sum.value()), ++next;
        sum += term(static_cast<double>(p));
    });
    while (out.size() < points.size()) out.push_back(sum.value());
    return out;
}

std::uint64_t squarefree_count(std::uint64_t x, const std::vector<std::int8_t>& mu) {
    std::int64_t total = 0;
    for (std::uint64_t d = 1; d * d <= x; ++d)
        if (mu[d]) total += mu[d] * static_cast<std::int64_t>(x / (d * d));
    return static_cast<std::uint64_t>(total);
}

}  // namespace

std::vector<std::uint64_t> decade_points(std::uint64_t lo, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 1; p <= n; p *= 10) {
        if (p >= lo) out.push_back(p);
        if (p > n / 10) break;
    }
    if (out.empty() || out.back() != n) out.push_back(n);
    return out;
}

// --- Erdos-Euclid ---------------------------------------------------------

std::vector<std::uint64_t> square_root_part_histogram(std::uint64_t n) {
    // #{z <= N : Y(z) = y} = #{squarefree s <= N / y^2}
    const std::uint64_t root = isqrt(n);
    const auto mu = mobius_table(std::max<std::uint64_t>(1, root));
    std::vector<std::uint64_t> hist(root + 1, 0);
    for (std::uint64_t y = 1; y <= root; ++y) hist[y] = squarefree_count(n / (y * y), mu);
    return hist;
}

std::uint64_t odd_valuation_count(std::uint64_t p, std::uint64_t n) {
    std::uint64_t count = 0;
    std::uint64_t pk = p;  // p^k, k odd
    for (unsigned k = 1;; ++k) {
        const std::uint64_t here = n / pk;
        if (here == 0) break;
        const std::uint64_t next = pk > n / p ? 0 : n / (pk * p);
        if (k & 1) count += here - next;
        if (pk > n / p) break;
        pk *= p;
    }
    return count;
}

ExperimentReport erdos_euclid_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 4, "erdos_euclid_report");
    const double total = static_cast<double>(n);

    CompensatedSum h_y;
    for (auto c : square_root_part_histogram(n))
        if (c) {
            const double q = static_cast<double>(c) / total;
            h_y += -q * std::log2(q);
        }
    CompensatedSum h_x;
    table.for_each_prime(n, [&](std::uint64_t p) {
        h_x += binary_entropy(static_cast<double>(odd_valuation_count(p, n)) / total);
    });

    const double pi = static_cast<double>(table.count(n));
    const double h_z = std::log2(total);
    const double half = 0.5 * h_z;

    auto r = make_report("erdos_euclid", n);
    r.scalars["pi_N"] = pi;
    r.scalars["H_Z"] = h_z;
    r.scalars["H_Y"] = h_y.value();
    r.scalars["sum_H_X"] = h_x.value();
    r.scalars["H_Y_plus_sum_H_X"] = h_y.value() + h_x.value();
    r.scalars["half_log2_N"] = half;
    r.scalars["bound_rhs"] = half + pi;
    r.checks["entropy_subadditivity"] = h_z <= h_y.value() + h_x.value() + kEntropyTolerance;
    r.checks["square_part_entropy"] = h_y.value() <= half + kEntropyTolerance;
    r.checks["pi_lower_bound"] = pi >= half;
    return r;
}

// --- Chebyshev ------------------------------------------------------------

double geometric_exponent_mean(const PrimeTable& table, std::uint64_t p, std::uint64_t n) {
    require(n >= 2 && n <= table.limit(), "geometric_exponent_mean: N outside the prime table");
    require(p <= n && table.is_prime(p), "geometric_exponent_mean: p must be a prime <= N");
    std::uint64_t total = 0;
    for (std::uint64_t pk = p;; pk *= p) {
        total += n / pk;
        if (pk > n / p) break;
    }
    return static_cast<double>(total) / static_cast<double>(n);
}

ExperimentReport chebyshev_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 10, "chebyshev_report");
    const auto points = decade_points(10, n);
    const auto sums = prime_sums_at(table, points, [](double p) { return std::log(p) / p; });

    auto r = make_report("chebyshev", n);
    auto& ratios = r.series["ratio"];
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = static_cast<double>(points[i]);
        ratios.emplace_back(x, sums[i] / std::log(x));
    }
    const double ratio = ratios.back().second;
    r.scalars["chebyshev_sum"] = sums.back();
    r.scalars["ln_N"] = std::log(static_cast<double>(n));
    r.scalars["ratio"] = ratio;
    r.checks["ratio_increasing"] = monotone(ratios, Order::increasing);
    r.checks["ratio_in_range"] = n < kScaleThreshold || (ratio >= 0.8 && ratio <= 1.05);
    return r;
}

ExperimentReport prime_entropy_corollary(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 10, "prime_entropy_corollary");
    const auto points = decade_points(10, n);
    const auto a = prime_sums_at(table, points, [](double p) { return -(1.0 - 1.0 / p) * std::log1p(-1.0 / p); });
    const auto b = prime_sums_at(table, points, [](double p) { return std::log(p) / p; });

    auto r = make_report("prime_entropy", n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = static_cast<double>(points[i]);
        r.series["A_ratio"].emplace_back(x, a[i] / lnln(x));
        r.series["B_ratio"].emplace_back(x, b[i] / std::log(x));
        r.series["B"].emplace_back(x, b[i]);
    }
    const double a_ratio = r.series["A_ratio"].back().second;
    const double b_ratio = r.series["B_ratio"].back().second;
    r.scalars["A"] = a.back();
    r.scalars["B"] = b.back();
    r.scalars["ln_ln_N"] = lnln(static_cast<double>(n));
    r.scalars["ln_N"] = std::log(static_cast<double>(n));
    r.scalars["A_ratio"] = a_ratio;
    r.scalars["B_ratio"] = b_ratio;
    r.checks["ratios_in_range"] =
        n < kScaleThreshold || (a_ratio >= 0.5 && a_ratio <= 1.5 && b_ratio >= 0.5 && b_ratio <= 1.5);
    r.checks["B_increasing"] = monotone(r.series["B"], Order::increasing);
    return r;
}

// --- Prime coding / source density / PNT ------------------------------------

ExperimentReport prime_coding_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 100, "prime_coding_report");
    auto r = make_report("prime_coding", n);
    auto& ratios = r.series["ratio"];
    for (auto x : decade_points(100, n)) {
        const auto xd = static_cast<double>(x);
        ratios.emplace_back(xd, static_cast<double>(table.count(x)) * std::log(xd) / xd);
    }
    const double pi = static_cast<double>(table.count(n));
    r.scalars["pi_N"] = pi;
    r.scalars["ln_N"] = std::log(static_cast<double>(n));
    r.scalars["ratio"] = ratios.back().second;
    r.scalars["model_description_nats"] = pi * std::log(static_cast<double>(n));
    r.checks["ratio_decreasing"] = monotone(ratios, Order::decreasing, 1e4);
    return r;
}

ExperimentReport source_density_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 10, "source_density_report");
    const auto points = decade_points(10, n);
    auto r = make_report("source_density", n);
    auto& ratios = r.series["ratio"];
    CompensatedSum mass;
    std::size_t next = 0;
    for (std::uint64_t k = 2; k <= n; ++k) {
        mass += 1.0 / std::log(static_cast<double>(k));
        if (k == points[next]) {
            ratios.emplace_back(static_cast<double>(k), mass.value() / static_cast<double>(table.count(k)));
            ++next;
        }
    }
    const double ratio = ratios.back().second;
    r.scalars["density_mass"] = mass.value();
    r.scalars["pi_N"] = static_cast<double>(table.count(n));
    r.scalars["ratio"] = ratio;
    r.checks["ratio_in_range"] = n < kScaleThreshold || (ratio >= 0.95 && ratio <= 1.1);
    bool converging = true;
    for (const auto& [x, y] : ratios)
        if (x == 1000.0 && n > 1000) converging = std::fabs(ratio - 1.0) < std::fabs(y - 1.0);
    r.checks["converging"] = converging;
    return r;
}

ExperimentReport pnt_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 100, "pnt_report");
    const auto points = decade_points(10, n);
    auto r = make_report("pnt", n);
    CompensatedSum harmonic;
    std::size_t next = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        harmonic += 1.0 / static_cast<double>(k);
        if (k == points[next]) {
            const auto x = static_cast<double>(k);
            r.series["harmonic_minus_ln"].emplace_back(x, harmonic.value() - std::log(x));
            r.series["S_c"].emplace_back(x, x / static_cast<double>(table.count(k)));
            ++next;
        }
    }
    const double ln_n = std::log(static_cast<double>(n));
    const double s_c = static_cast<double>(n) / static_cast<double>(table.count(n));
    const double rel = std::fabs(s_c - ln_n) / ln_n;
    const double gap = std::fabs(harmonic.value() - ln_n - std::numbers::egamma);
    r.scalars["S_c"] = s_c;
    r.scalars["ln_N"] = ln_n;
    r.scalars["harmonic_sum"] = harmonic.value();
    r.scalars["harmonic_minus_ln"] = harmonic.value() - ln_n;
    r.scalars["S_c_relative_error"] = rel;
    r.scalars["gamma_gap"] = gap;
    r.checks["S_c_near_ln_N"] = n < kScaleThreshold || rel <= 0.15;
    r.checks["harmonic_gamma"] = n < kScaleThreshold || gap <= 1e-3;
    r.checks["harmonic_decreasing"] = monotone(r.series["harmonic_minus_ln"], Order::decreasing);
    return r;
}

// --- Predictor bound --------------------------------------------------------

ExperimentReport predictor_tpr(const PredictorTrace& trace, const PrimeTable& table) {
    const std::uint64_t n = trace.horizon;
    require(n >= 1, "predictor trace needs a horizon >= 1");
    require(n <= table.limit(), "predictor horizon exceeds the prime table limit");
    require(!trace.predictions.empty(), "predictor trace is empty");
    require(trace.predictions.size() <= n, "predictor trace has more predictions than its horizon");
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t hits = 0;
    std::vector<double> reciprocals;
    reciprocals.reserve(trace.predictions.size());
    for (auto p : trace.predictions) {
        require(p >= 1, "predictions must be >= 1");
        require(p <= table.limit(), "prediction " + std::to_string(p) + " exceeds the prime table limit");
        require(seen.insert(p).second, "predictions must be distinct (" + std::to_string(p) + " repeats)");
        if (table.is_prime(p)) ++hits;
        reciprocals.push_back(1.0 / static_cast<double>(p));
    }
    // ascending order of magnitude for the compensated sum
    std::sort(reciprocals.begin(), reciprocals.end());
    CompensatedSum model;
    for (double x : reciprocals) model += x;
    CompensatedSum harmonic;
    for (std::uint64_t k = n; k >= 1; --k) harmonic += 1.0 / static_cast<double>(k);

    const auto nd = static_cast<double>(n);
    auto r = make_report("predictor", n);
    r.scalars["predictions"] = static_cast<double>(trace.predictions.size());
    r.scalars["hits"] = static_cast<double>(hits);
    r.scalars["tpr"] = static_cast<double>(hits) / static_cast<double>(trace.predictions.size());
    r.scalars["model_bound"] = model.value() / nd;
    r.scalars["harmonic_bound"] = harmonic.value() / nd;
    r.scalars["ln_N_over_N"] = std::log(nd) / nd;
    r.checks["harmonic_majorization"] = model.value() <= harmonic.value() * (1.0 + 1e-12);
    return r;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
    if (n < 6) return 13;
    const auto x = static_cast<double>(n);
    return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

ExperimentReport predictor_baselines(const PrimeTable& table, std::uint64_t n, std::uint64_t seed) {
    require(n >= 1, "predictor baselines need N >= 1");
    require(nth_prime_upper_bound(n) <= table.limit(), "prime table too small for the oracle predictor");

    PredictorTrace identity{{}, n};
    for (std::uint64_t k = 1; k <= n; ++k) identity.predictions.push_back(k);

    PredictorTrace oracle{{}, n};
    table.for_each_prime(table.limit(), [&](std::uint64_t p) {
        if (oracle.predictions.size() < n) oracle.predictions.push_back(p);
    });

    PredictorTrace random{{}, n};
    Rng rng(seed);
    std::unordered_set<std::uint64_t> used;
    const std::uint64_t range = table.limit();
    while (random.predictions.size() < n) {
        const auto v = rng.between(1, range);
        if (used.insert(v).second) random.predictions.push_back(v);
    }

    auto r = make_report("predictor", n);
    r.merge(predictor_tpr(identity, table), "identity");
    r.merge(predictor_tpr(oracle, table), "oracle");
    r.merge(predictor_tpr(random, table), "random");
    return r;
}

// --- Erdos-Kac / Lindeberg / Hardy-Ramanujan ------------------------------

ErdosKacSample erdos_kac_sample(const PrimeTable& table, std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
    require_range(table, n, 100, "erdos_kac_sample");
    require(m >= 1, "erdos_kac_sample needs m >= 1");
    const double ll = lnln(static_cast<double>(n));
    const double scale = std::sqrt(ll);
    const bool exhaustive = m >= n;

    std::vector<std::uint8_t> omegas;
    if (exhaustive) {
        auto table_omega = omega_table(table, n);
        omegas.assign(table_omega.begin() + 1, table_omega.end());
    } else {
        const auto small = table.primes_up_to(isqrt(n));
        Rng rng(seed);
        omegas.reserve(m);
        for (std::uint64_t i = 0; i < m; ++i) {
            std::uint64_t rest = rng.between(1, n);
            std::uint8_t w = 0;
            for (auto p : small) {
                if (p * p > rest) break;
                if (rest % p == 0) {
                    ++w;
                    do rest /= p;
                    while (rest % p == 0);
                }
            }
            if (rest > 1) ++w;
            omegas.push_back(w);
        }
    }

    ErdosKacSample out;
    out.standardized.reserve(omegas.size());
    std::vector<std::uint64_t> freq;
    CompensatedSum sum;
    for (auto w : omegas) {
        if (w >= freq.size()) freq.resize(w + 1, 0);
        ++freq[w];
        sum += w;
        out.standardized.push_back((w - ll) / scale);
    }
    const auto count = static_cast<double>(omegas.size());
    const double mean = sum.value() / count;
    CompensatedSum sq;
    for (std::size_t k = 0; k < freq.size(); ++k)
        sq += static_cast<double>(freq[k]) * (static_cast<double>(k) - mean) * (static_cast<double>(k) - mean);
    const double var = sq.value() / count;
    const double ks = ks_statistic(out.standardized, normal_cdf);

    auto& r = out.report;
    r = make_report("erdos_kac", n);
    for (std::size_t k = 0; k < freq.size(); ++k)
        r.series["omega_frequency"].emplace_back(static_cast<double>(k), static_cast<double>(freq[k]) / count);
    r.scalars["mean_omega"] = mean;
    r.scalars["var_omega"] = var;
    r.scalars["ks_distance"] = ks;
    r.scalars["ln_ln_N"] = ll;
    r.scalars["mertens_shift"] = ll + kMeisselMertens;
    r.scalars["mean_gap"] = mean - (ll + kMeisselMertens);
    r.scalars["sample_size"] = count;
    r.scalars["exhaustive"] = exhaustive ? 1.0 : 0.0;
    r.checks["mean_near_mertens"] = std::fabs(mean - (ll + kMeisselMertens)) <= 0.03;
    r.checks["variance_order"] = var >= 0.5 * ll && var <= 1.5 * ll;
    return out;
}

ExperimentReport lindeberg_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 100, "lindeberg_report");
    const auto points = decade_points(100, n);
    const auto sums = prime_sums_at(table, points, [](double p) { return 1.0 / p; });
    auto r = make_report("lindeberg", n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = static_cast<double>(points[i]);
        const auto pi = static_cast<double>(table.count(points[i]));
        const double sigma = sums[i] / (pi * lnln(x));
        r.series["sigma"].emplace_back(x, sigma);
        r.series["sigma_times_pi"].emplace_back(x, sigma * pi);
    }
    const double pi = static_cast<double>(table.count(n));
    const double sigma = r.series["sigma"].back().second;
    r.scalars["sigma_N"] = sigma;
    r.scalars["reference"] = 1.0 / pi;
    r.scalars["ratio"] = sigma * pi;
    r.scalars["mertens_sum"] = sums.back();
    r.scalars["ln_ln_N"] = lnln(static_cast<double>(n));
    r.checks["ratio_in_range"] = sigma * pi >= 0.5 && sigma * pi <= 1.5;
    r.checks["sigma_decreasing"] = monotone(r.series["sigma"], Order::decreasing);
    return r;
}

ExperimentReport hardy_ramanujan_census(const PrimeTable& table, std::uint64_t n, double epsilon) {
    require_range(table, n, 100, "hardy_ramanujan_census");
    require(epsilon > 0.0 && !std::isnan(epsilon), "hardy_ramanujan_census needs epsilon > 0");
    const auto omega = omega_table(table, n);
    const auto points = decade_points(100, n);
    auto r = make_report("hardy_ramanujan", n);
    auto& fractions = r.series["fraction"];
    std::uint64_t inside = 0;
    std::size_t next = 0;
    for (std::uint64_t k = 3; k <= n; ++k) {
        const double ll = lnln(static_cast<double>(k));
        if (std::fabs(omega[k] - ll) < epsilon * ll) ++inside;
        if (k == points[next]) {
            fractions.emplace_back(static_cast<double>(k), static_cast<double>(inside) / static_cast<double>(k - 2));
            ++next;
        }
    }
    r.scalars["fraction"] = fractions.back().second;
    r.scalars["epsilon"] = epsilon;
    r.scalars["inside"] = static_cast<double>(inside);
    r.scalars["census_size"] = static_cast<double>(n - 2);
    r.checks["fraction_nondecreasing"] = epsilon < 1.0 || monotone(fractions, Order::nondecreasing);
    return r;
}

ExperimentReport riemann_report(const PrimeTable& table, std::uint64_t n) {
    require_range(table, n, 10, "riemann_report");
    auto r = make_report("riemann", n);
    for (auto x : decade_points(10, n)) {
        const auto xd = static_cast<double>(x);
        const auto pi = static_cast<double>(table.count(x));
        const double rx = riemann_R(xd);
        r.series["R"].emplace_back(xd, rx);
        r.series["relative_error"].emplace_back(xd, std::fabs(rx - pi) / pi);
    }
    const auto nd = static_cast<double>(n);
    const double pi = static_cast<double>(table.count(n));
    const double rx = riemann_R(nd);
    const double rel = std::fabs(rx - pi) / pi;
    r.scalars["R"] = rx;
    r.scalars["li"] = log_integral(nd);
    r.scalars["pi_N"] = pi;
    r.scalars["relative_error"] = rel;
    r.scalars["n_max"] = std::floor(std::log2(nd));
    r.checks["relative_error_small"] = n < kScaleThreshold || rel < 5e-4;
    return r;
}

ExperimentReport lz_primes_report(const PrimeTable& table, std::uint64_t n, std::uint64_t seed) {
    require_range(table, n, 2, "lz_primes_report");
    const auto primes = lz78_phrase_complexity(prime_encoding(table, n).bits);
    const auto coin = lz78_phrase_complexity(fair_coin_bits(static_cast<std::size_t>(n), seed));
    const auto zeros = lz78_phrase_complexity(BitVector(static_cast<std::size_t>(n)));
    const auto nd = static_cast<double>(n);
    auto r = make_report("lz_primes", n);
    r.scalars["primes_phrase_count"] = static_cast<double>(primes.phrase_count);
    r.scalars["primes_normalized"] = primes.normalized;
    r.scalars["coin_phrase_count"] = static_cast<double>(coin.phrase_count);
    r.scalars["coin_normalized"] = coin.normalized;
    r.scalars["zeros_phrase_count"] = static_cast<double>(zeros.phrase_count);
    r.scalars["zeros_normalized"] = zeros.normalized;
    r.scalars["model_nats_per_symbol"] = static_cast<double>(table.count(n)) * std::log(nd) / nd;
    r.checks["primes_between_regular_and_random"] =
        zeros.normalized < primes.normalized && primes.normalized < coin.normalized;
    return r;
}

}  // namespace entropia
