// harness.hpp
// Experiment runner behind the `entropia` command line.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "entropia/prime_table.hpp"
#include "entropia/report.hpp"

namespace entropia {

enum class Experiment {
    erdos_euclid,
    chebyshev,
    prime_entropy,
    prime_coding,
    source_density,
    pnt,
    predictor,
    erdos_kac,
    lindeberg,
    hardy_ramanujan,
    riemann,
    lz_primes,
    source_coding,
};

inline constexpr std::array kAllExperiments = {
    Experiment::erdos_euclid, Experiment::chebyshev,       Experiment::prime_entropy, Experiment::prime_coding,
    Experiment::source_density, Experiment::pnt,           Experiment::predictor,     Experiment::erdos_kac,
    Experiment::lindeberg,    Experiment::hardy_ramanujan, Experiment::riemann,       Experiment::lz_primes,
    Experiment::source_coding,
};

/// Command-line name, e.g. "erdos-kac".
std::string_view experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

inline constexpr std::uint64_t kDefaultLimit = 1'000'000;
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;
inline constexpr std::uint64_t kDefaultSample = 1'000'000;

struct RunConfig {
    Experiment experiment = Experiment::chebyshev;
    std::uint64_t n_limit = kDefaultLimit;
    std::uint64_t sample_size = 0;  // 0: exhaustive up to 10^7, else 10^6 draws
    double epsilon = 1.0;
    std::uint64_t seed = 42;
    OutputFormat output_format = OutputFormat::json;
    std::optional<std::filesystem::path> cache_path;
    std::filesystem::path out_dir = "reports";
    std::optional<std::filesystem::path> distribution_path;  // source-coding input
};

/// --out default: $ENTROPIA_OUT if set, else "reports".
std::filesystem::path default_out_dir();

/// Prime table size an experiment needs (0 when it needs none).
std::uint64_t required_table_limit(const RunConfig& config);

/// Loads the cache when it covers `limit` ("cache hit" on `log`), otherwise
/// sieves and, if a cache path is given, rewrites it. Unreadable or corrupt
/// caches are rebuilt with a warning.
PrimeTable obtain_table(std::uint64_t limit, const std::optional<std::filesystem::path>& cache, std::ostream& log);

/// Dispatches to exactly one experiment operation. `table` may be null only
/// when required_table_limit() is 0.
ExperimentReport run_experiment(const RunConfig& config, const PrimeTable* table);

/// Full run: table, experiment, report files, summary on `out`.
/// Returns 0 if every check passes, 2 if any fails, 1 on a domain error.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// `sieve` subcommand: builds or loads the table and prints pi(N).
int run_sieve(std::uint64_t n, const std::optional<std::filesystem::path>& cache, std::ostream& out, std::ostream& log);

}  // namespace entropia
