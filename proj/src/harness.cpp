#include "entropia/harness.hpp"

#include <chrono>
#include <cstdlib>

#include "entropia/coding.hpp"
#include "entropia/distribution.hpp"
#include "entropia/error.hpp"
#include "entropia/experiments.hpp"
#include "entropia/sieve_cache.hpp"

namespace entropia {

namespace {

constexpr std::array<std::pair<Experiment, std::string_view>, kAllExperiments.size()> kNames{{
    {Experiment::erdos_euclid, "erdos-euclid"},
    {Experiment::chebyshev, "chebyshev"},
    {Experiment::prime_entropy, "prime-entropy"},
    {Experiment::prime_coding, "prime-coding"},
    {Experiment::source_density, "source-density"},
    {Experiment::pnt, "pnt"},
    {Experiment::predictor, "predictor"},
    {Experiment::erdos_kac, "erdos-kac"},
    {Experiment::lindeberg, "lindeberg"},
    {Experiment::hardy_ramanujan, "hardy-ramanujan"},
    {Experiment::riemann, "riemann"},
    {Experiment::lz_primes, "lz-primes"},
    {Experiment::source_coding, "source-coding"},
}};

Distribution default_source() { return Distribution({"a", "b", "c", "d"}, {0.4, 0.3, 0.2, 0.1}); }

}  // namespace

std::string_view experiment_name(Experiment e) {
    for (const auto& [exp, name] : kNames)
        if (exp == e) return name;
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
    for (const auto& [exp, n] : kNames)
        if (n == name) return exp;
    return std::nullopt;
}

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("ENTROPIA_OUT"); env && *env) return env;
    return "reports";
}

std::uint64_t required_table_limit(const RunConfig& config) {
    switch (config.experiment) {
        case Experiment::source_coding:
            return 0;
        case Experiment::predictor:
            return std::max(config.n_limit, nth_prime_upper_bound(config.n_limit));
        default:
            return config.n_limit;
    }
}

PrimeTable obtain_table(std::uint64_t limit, const std::optional<std::filesystem::path>& cache, std::ostream& log) {
    if (cache && std::filesystem::exists(*cache)) {
        try {
            auto table = load_table(*cache);
            if (table.limit() >= limit) {
                log << "cache hit: " << cache->string() << " (limit " << table.limit() << ")\n";
                return table;
            }
            log << "cache covers only " << table.limit() << " < " << limit << ", rebuilding\n";
        } catch (const std::exception& e) {
            log << "warning: unreadable cache " << cache->string() << " (" << e.what() << "), rebuilding\n";
        }
    }
    const auto start = std::chrono::steady_clock::now();
    auto table = build_table(limit);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    log << "sieved [1, " << limit << "] in " << took.count() << " s\n";
    if (cache) {
        save_table(*cache, table);
        log << "cache written: " << cache->string() << "\n";
    }
    return table;
}

ExperimentReport run_experiment(const RunConfig& c, const PrimeTable* table) {
    const std::uint64_t n = c.n_limit;
    if (required_table_limit(c) > 0 && (!table || table->limit() < required_table_limit(c)))
        throw DomainError("experiment needs a prime table up to " + std::to_string(required_table_limit(c)));
    switch (c.experiment) {
        case Experiment::erdos_euclid:
            return erdos_euclid_report(*table, n);
        case Experiment::chebyshev:
            return chebyshev_report(*table, n);
        case Experiment::prime_entropy:
            return prime_entropy_corollary(*table, n);
        case Experiment::prime_coding:
            return prime_coding_report(*table, n);
        case Experiment::source_density:
            return source_density_report(*table, n);
        case Experiment::pnt:
            return pnt_report(*table, n);
        case Experiment::predictor:
            return predictor_baselines(*table, n, c.seed);
        case Experiment::erdos_kac: {
            const std::uint64_t m = c.sample_size ? c.sample_size : (n <= kExhaustiveLimit ? n : kDefaultSample);
            return erdos_kac_sample(*table, n, m, c.seed).report;
        }
        case Experiment::lindeberg:
            return lindeberg_report(*table, n);
        case Experiment::hardy_ramanujan:
            return hardy_ramanujan_census(*table, n, c.epsilon);
        case Experiment::riemann:
            return riemann_report(*table, n);
        case Experiment::lz_primes:
            return lz_primes_report(*table, n, c.seed);
        case Experiment::source_coding: {
            const auto dist = c.distribution_path ? read_distribution_csv(*c.distribution_path) : default_source();
            return source_coding_trial(dist, n, c.seed);
        }
    }
    throw DomainError("unknown experiment");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
    try {
        if (config.n_limit < 2) throw DomainError("--n must be >= 2");
        std::optional<PrimeTable> table;
        if (const auto limit = required_table_limit(config); limit > 0)
            table.emplace(obtain_table(limit, config.cache_path, log));
        const auto report = run_experiment(config, table ? &*table : nullptr);
        for (const auto& path : write_report(report, config.out_dir, config.output_format))
            log << "wrote " << path.string() << "\n";
        for (const auto& [name, ok] : report.checks) out << (ok ? "PASS " : "FAIL ") << report.name << '.' << name << '\n';
        return report.all_checks_pass() ? 0 : 2;
    } catch (const DomainError& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_sieve(std::uint64_t n, const std::optional<std::filesystem::path>& cache, std::ostream& out, std::ostream& log) {
    try {
        const auto table = obtain_table(n, cache, log);
        out << "pi(" << n << ") = " << table.count(n) << "\n";
        return 0;
    } catch (const DomainError& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace entropia
