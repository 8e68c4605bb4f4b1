// experiments.hpp
// One report per number-theoretic law, evaluated exhaustively (or by seeded
// sampling) over [1, N]. Reports never throw on a failed check; checks are
// diagnostics. Range checks that only make sense at scale are evaluated for
// N >= 10^6 and are vacuously true below that.
//
// Stable report keys are listed in README.md.
#pragma once

#include <cstdint>
#include <vector>

#include "entropia/prime_table.hpp"
#include "entropia/report.hpp"

namespace entropia {

inline constexpr double kMeisselMertens = 0.26149721284764278;
inline constexpr std::uint64_t kScaleThreshold = 1'000'000;

/// 10^k for lo <= 10^k <= n, followed by n itself when n is not a power of ten.
std::vector<std::uint64_t> decade_points(std::uint64_t lo, std::uint64_t n);

/// Entropy of the square part Y and of the squarefree prime indicators X_p
/// for Z uniform on [1, N], against H(Z) = log2 N.
ExperimentReport erdos_euclid_report(const PrimeTable& table, std::uint64_t n);

/// Empirical histogram of Y = square root part over [1, N], hist[y] for y in [1, isqrt N].
std::vector<std::uint64_t> square_root_part_histogram(std::uint64_t n);

/// Number of n in [1, N] whose p-adic valuation is odd.
std::uint64_t odd_valuation_count(std::uint64_t p, std::uint64_t n);

/// E[X_p] = (1/N) sum_k floor(N / p^k).
double geometric_exponent_mean(const PrimeTable& table, std::uint64_t p, std::uint64_t n);

ExperimentReport chebyshev_report(const PrimeTable& table, std::uint64_t n);
ExperimentReport prime_entropy_corollary(const PrimeTable& table, std::uint64_t n);
ExperimentReport prime_coding_report(const PrimeTable& table, std::uint64_t n);
ExperimentReport source_density_report(const PrimeTable& table, std::uint64_t n);
ExperimentReport pnt_report(const PrimeTable& table, std::uint64_t n);

struct PredictorTrace {
    std::vector<std::uint64_t> predictions;  // distinct, >= 1
    std::uint64_t horizon = 0;               // N
};

ExperimentReport predictor_tpr(const PredictorTrace& trace, const PrimeTable& table);

/// Identity, prime-oracle and seeded random traces of length N merged under
/// "identity.", "oracle." and "random.". The table must reach the N-th prime.
ExperimentReport predictor_baselines(const PrimeTable& table, std::uint64_t n, std::uint64_t seed);

/// Upper bound on the n-th prime (Rosser), used to size tables for the oracle trace.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

struct ErdosKacSample {
    std::vector<double> standardized;  // (omega(n) - ln ln N) / sqrt(ln ln N)
    ExperimentReport report;
};

/// Exhaustive over [1, N] when m >= N (seed ignored), otherwise m uniform
/// draws with replacement.
ErdosKacSample erdos_kac_sample(const PrimeTable& table, std::uint64_t n, std::uint64_t m, std::uint64_t seed);

ExperimentReport lindeberg_report(const PrimeTable& table, std::uint64_t n);

/// Fraction of n in [3, N] with |omega(n) - ln ln n| < epsilon ln ln n.
ExperimentReport hardy_ramanujan_census(const PrimeTable& table, std::uint64_t n, double epsilon = 1.0);

/// R(N) and li(N) against pi(N) at decade checkpoints.
ExperimentReport riemann_report(const PrimeTable& table, std::uint64_t n);

/// LZ78 phrase complexity of the prime encoding against a fair coin and an
/// all-zero string of the same length.
ExperimentReport lz_primes_report(const PrimeTable& table, std::uint64_t n, std::uint64_t seed);

}  // namespace entropia
